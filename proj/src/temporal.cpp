#include "tempus/temporal.hpp"

#include <cmath>
#include <string>

#include "tempus/constants.hpp"

namespace tempus::temporal {

namespace {

constexpr double kPi = constants::pi;
constexpr double kC = constants::c_m_per_s;

// Shift raw by whole turns so it lands within pi of prev.
double unwrap(double prev, double raw) {
  return raw + 2.0 * kPi * std::round((prev - raw) / (2.0 * kPi));
}

struct LogSample {
  double log_mag;
  double phase;
};

LogSample log_sample(const SpectralResponse& s, double omega, double k,
                     double floor) {
  const std::complex<double> v = s.eval(omega, k);
  const double mag = std::abs(v);
  if (!(mag > floor)) {
    throw ZeroResponse("|S(" + std::to_string(omega) +
                       ")| below the zero floor");
  }
  return {std::log(mag), std::arg(v)};
}

// One central-difference estimate of (1/i) d ln S / d omega.
TemporalPair central_estimate(const SpectralResponse& s, double omega,
                              double k, double h, double floor) {
  LogSample lo = log_sample(s, omega - h, k, floor);
  LogSample mid = log_sample(s, omega, k, floor);
  LogSample hi = log_sample(s, omega + h, k, floor);
  mid.phase = unwrap(lo.phase, mid.phase);
  hi.phase = unwrap(mid.phase, hi.phase);
  // tau = (1/i)(d ln|S|/dw + i dphi/dw) = dphi/dw - i d ln|S|/dw
  return {(hi.phase - lo.phase) / (2.0 * h),
          -(hi.log_mag - lo.log_mag) / (2.0 * h)};
}

double pole_distance_to_multiples_of_pi(double x) {
  const double n = std::round(x / kPi);
  return std::abs(x - n * kPi);
}

}  // namespace

TemporalPair temporal_pair(const SpectralResponse& s, double omega, double k,
                           double step, const DiffOptions& opt) {
  if (!(step > 0.0)) {
    throw DomainError("differentiation step must be positive");
  }
  if (omega - step < s.omega_min || omega + step > s.omega_max) {
    throw DomainError("stencil [omega-step, omega+step] exits the declared domain");
  }
  log_sample(s, omega, k, opt.zero_floor);  // ZeroResponse check at the point itself
  const TemporalPair d1 = central_estimate(s, omega, k, step, opt.zero_floor);
  if (!opt.richardson) {
    return d1;
  }
  const TemporalPair d2 =
      central_estimate(s, omega, k, 0.5 * step, opt.zero_floor);
  return {(4.0 * d2.tau1 - d1.tau1) / 3.0, (4.0 * d2.tau2 - d1.tau2) / 3.0};
}

SpectralResponse phase_delay_response(double t0) {
  return {[t0](double w, double) {
            return std::exp(std::complex<double>(0.0, w * t0));
          },
          -1e300, 1e300, false};
}

SpectralResponse log_slope_response(double big_omega) {
  return {[big_omega](double w, double) {
            return std::complex<double>(std::exp(-w / big_omega), 0.0);
          },
          -1e300, 1e300, false};
}

SpectralResponse phase_and_slope_response(double t0, double big_omega) {
  return {[t0, big_omega](double w, double) {
            return std::exp(std::complex<double>(-w / big_omega, w * t0));
          },
          -1e300, 1e300, false};
}

SpectralResponse lorentzian_response(double omega0, double gamma) {
  return {[omega0, gamma](double w, double) {
            return 1.0 / std::complex<double>(w - omega0, 0.5 * gamma);
          },
          -1e300, 1e300, false};
}

TemporalPair photon_propagator_times(double omega, double k_abs,
                                     double epsilon) {
  const double shell = k_abs * kC;
  const double scale = std::max(std::abs(omega), std::abs(shell));
  if (std::abs(omega - shell) <= epsilon * scale) {
    throw OnShellError("omega = |k|c: delay is delta-supported with weight -pi");
  }
  return {0.0, 1.0 / (omega - shell)};
}

double mixed_formation_time(double omega, double r, double epsilon) {
  const double x = omega * r / kC;
  if (pole_distance_to_multiples_of_pi(x) < epsilon) {
    throw PoleError("omega r/c within epsilon of a cotangent pole n pi");
  }
  return -(r / kC) / std::tan(x);
}

double renormalized_formation_time(double omega, double r, long n_terms,
                                   double epsilon) {
  if (n_terms < 1) {
    throw DomainError("n_terms must be >= 1");
  }
  const double x = omega * r / kC;
  const double n_near = std::round(x / kPi);
  if (n_near >= 1.0 && std::abs(x - n_near * kPi) < epsilon) {
    throw PoleError("omega r/c within epsilon of a series pole n pi, n >= 1");
  }

  // The tail expansion below needs every remaining term pole-free and
  // |x| < pi(N+1); extend the direct sum if the caller's N is too small.
  long n_direct = n_terms;
  const long n_min = static_cast<long>(std::ceil(std::abs(x) / kPi)) + 8;
  if (n_direct < n_min) n_direct = n_min;

  // Direct terms, summed smallest first.
  double series = 0.0;
  for (long n = n_direct; n >= 1; --n) {
    const double pn = kPi * static_cast<double>(n);
    series += 2.0 * x / (x * x - pn * pn);
  }

  // Tail: sum_{n>N} 2x/(x^2 - pi^2 n^2) = -2 sum_j x^{2j+1} / pi^{2j+2} S_{2j+2}(N)
  // with S_p(N) = sum_{n>N} n^-p by Euler-Maclaurin through the 1/N^{p+1} term.
  const double N = static_cast<double>(n_direct);
  double xpow = x;
  double pipow = kPi * kPi;
  for (int j = 0; j < 3; ++j) {
    const double p = 2.0 * (j + 1);
    const double s_p = 1.0 / ((p - 1.0) * std::pow(N, p - 1.0)) -
                       1.0 / (2.0 * std::pow(N, p)) +
                       p / (12.0 * std::pow(N, p + 1.0));
    series += -2.0 * xpow / pipow * s_p;
    xpow *= x * x;
    pipow *= kPi * kPi;
  }

  return -(r / kC) * series;
}

double formation_path(double delta_omega) {
  if (delta_omega == 0.0) {
    throw ZeroDetuningError("formation path diverges at zero detuning");
  }
  return kPi * kC / std::abs(delta_omega);
}

TemporalPair massive_temporal(const MassiveState& state, double epsilon) {
  const double e = state.energy;
  const double m = state.mass;
  const double r = state.r;
  if (!(e > 0.0) || m < 0.0 || !(r > 0.0)) {
    throw DomainError("massive state requires E > 0, m >= 0, r > 0");
  }
  const double disc = e * e - m * m;
  if (std::abs(disc) <= epsilon * e * e) {
    throw OnShellError("E = m: temporal functions diverge on shell");
  }
  if (disc > 0.0) {
    const double kappa = std::sqrt(disc);
    if (pole_distance_to_multiples_of_pi(kappa * r) < epsilon) {
      throw PoleError("kappa r within epsilon of a cotangent pole n pi");
    }
    return {0.0, -(r * e / kappa) / std::tan(kappa * r)};
  }
  const double kappap = std::sqrt(-disc);
  return {(r * e / kappap) / std::tanh(kappap * r), 0.0};
}

double massive_formation_leading(double energy, double mass) {
  const double disc = energy * energy - mass * mass;
  if (disc == 0.0) {
    throw OnShellError("E = m: leading formation time diverges");
  }
  return -energy / disc;
}

}  // namespace tempus::temporal
