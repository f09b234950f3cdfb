#include "tempus/uncertainty.hpp"

#include <cmath>
#include <string>

#include "tempus/constants.hpp"

namespace tempus::uncertainty {

namespace {

constexpr double kPi = constants::pi;
constexpr double kHbar = constants::hbar_eV_s;

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

std::vector<double> trapezoid_weights(const std::vector<double>& axis) {
  const std::size_t n = axis.size();
  std::vector<double> w(n, 1.0);
  if (n < 2) return w;
  w[0] = 0.5 * (axis[1] - axis[0]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    w[i] = 0.5 * (axis[i + 1] - axis[i - 1]);
  }
  w[n - 1] = 0.5 * (axis[n - 1] - axis[n - 2]);
  return w;
}

}  // namespace

double bound_constant(ProcessKind kind) {
  switch (kind) {
    case ProcessKind::StableTransfer:
      return kPi;
    case ProcessKind::Decay:
      return kPi / 4.0;
    case ProcessKind::Transmutation:
      return 0.5;
  }
  throw DomainError("unknown process kind");
}

MinimalTime minimal_time(double delta_E_eV, ProcessKind kind) {
  if (delta_E_eV == 0.0) {
    throw ZeroEnergyError("minimal time diverges at zero energy deviation");
  }
  return {bound_constant(kind) * kHbar / std::abs(delta_E_eV), kind, true};
}

double transition_probability(double delta_E_eV, double tau_s) {
  // sin^2(x)/dE^2 = (tau/2hbar)^2 sinc^2(x), finite through dE = 0.
  const double x = delta_E_eV * tau_s / (2.0 * kHbar);
  const double amp = tau_s / (2.0 * kHbar);
  const double s = sinc(x);
  return amp * amp * s * s;
}

double transition_maximum_tau(double delta_E_eV, int n) {
  if (delta_E_eV == 0.0) {
    throw ZeroEnergyError("maxima undefined at zero energy deviation");
  }
  if (n < 0) {
    throw DomainError("maximum index must be nonnegative");
  }
  const auto density = [&](double tau) {
    return transition_probability(delta_E_eV, tau);
  };
  // The n-th maximum lies between the zeros at x = n pi and (n+1) pi.
  const double tau_unit = 2.0 * kHbar / std::abs(delta_E_eV);
  double a = static_cast<double>(n) * kPi * tau_unit;
  double b = static_cast<double>(n + 1) * kPi * tau_unit;

  // Golden-section narrowing.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = density(x1);
  double f2 = density(x2);
  const double span = b - a;
  while (b - a > 1e-10 * span) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = density(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = density(x1);
    }
  }

  // Polish: bisect the sign change of the central-difference slope. The
  // stencil is wide enough that the difference is far above rounding noise.
  const double h = 1e-5 * span;
  const auto slope = [&](double tau) { return density(tau + h) - density(tau - h); };
  double lo = a - 2.0 * h;
  double hi = b + 2.0 * h;
  double slo = slope(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * span; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double sm = slope(mid);
    if ((slo > 0.0) == (sm > 0.0)) {
      lo = mid;
      slo = sm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RsBound rs_bound(const OperatorPairState& state, double tol) {
  const auto& a = state.a;
  const auto& b = state.b;
  const auto& psi = state.psi;
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() ||
      psi.size() != a.rows()) {
    throw DimensionMismatch("operator/state dimensions disagree");
  }
  const double scale_a = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double scale_b = std::max(1.0, b.cwiseAbs().maxCoeff());
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > tol * scale_a) {
    throw NonHermitianError("A is not Hermitian");
  }
  if ((b - b.adjoint()).cwiseAbs().maxCoeff() > tol * scale_b) {
    throw NonHermitianError("B is not Hermitian");
  }
  if (std::abs(psi.norm() - 1.0) > tol) {
    throw NonUnitStateError("psi is not a unit vector");
  }

  const Eigen::VectorXcd apsi = a * psi;
  const Eigen::VectorXcd bpsi = b * psi;
  const double mean_a = psi.dot(apsi).real();
  const double mean_b = psi.dot(bpsi).real();
  const double var_a = apsi.squaredNorm() - mean_a * mean_a;  // <A^2> = |A psi|^2
  const double var_b = bpsi.squaredNorm() - mean_b * mean_b;
  const std::complex<double> ab = apsi.dot(bpsi);  // <AB>; <BA> = conj

  const double comm = ab.imag() * ab.imag();              // |<[A,B]>|^2/4
  const double cov_half = ab.real() - mean_a * mean_b;    // (<{A,B}> - 2<A><B>)/2
  return {var_a * var_b, comm, cov_half * cov_half};
}

ProjectorBound mt_projector_bound(double delta_H_eV, double t_s,
                                  ProcessKind kind) {
  if (t_s < 0.0) {
    throw NegativeTimeError("projector bound defined for t >= 0");
  }
  const double rate = std::abs(delta_H_eV) / kHbar;  // alpha = dH/hbar
  if (kind == ProcessKind::Transmutation) {
    const double sh = std::sinh(rate * t_s);
    const double lower = sh * sh;
    return {lower, 1.0, lower >= 1.0, std::asinh(1.0) / rate};
  }
  const double cs = std::cos(rate * t_s);
  const double completion = kPi / rate;
  return {cs * cs, 1.0,  false,
          kind == ProcessKind::Decay ? completion / 4.0 : completion};
}

void WavepacketGrid::validate() const {
  if (x.empty() || y.empty() || z.empty() || w.empty()) {
    throw DomainError("every grid axis needs at least one point");
  }
  if (samples.size() != size()) {
    throw DimensionMismatch("sample count does not match axis sizes");
  }
  for (double v : samples) {
    if (v < 0.0 || !std::isfinite(v)) {
      throw DomainError("|psi|^2 samples must be finite and nonnegative");
    }
  }
}

SpreadResult wigner_spreads(const WavepacketGrid& grid, std::size_t z_index) {
  grid.validate();
  if (z_index >= grid.z.size()) {
    throw DomainError("z index out of range");
  }
  const auto wx = trapezoid_weights(grid.x);
  const auto wy = trapezoid_weights(grid.y);
  const auto ww = trapezoid_weights(grid.w);
  const std::size_t ny = grid.y.size();
  const std::size_t nz = grid.z.size();
  const std::size_t nw = grid.w.size();

  const auto sample = [&](std::size_t ix, std::size_t iy, std::size_t iw) {
    return grid.samples[((ix * ny + iy) * nz + z_index) * nw + iw];
  };

  double total = 0.0;
  double first = 0.0;
  for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double wxy = wx[ix] * wy[iy];
      for (std::size_t iw = 0; iw < nw; ++iw) {
        const double q = wxy * ww[iw] * sample(ix, iy, iw);
        total += q;
        first += q * grid.w[iw];
      }
    }
  }
  if (!(total > 0.0)) {
    throw EmptySliceError("z-slice " + std::to_string(z_index) +
                          " has zero total weight");
  }
  const double ref = grid.reference ? *grid.reference : first / total;

  double second = 0.0;
  for (std::size_t ix = 0; ix < grid.x.size(); ++ix) {
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double wxy = wx[ix] * wy[iy];
      for (std::size_t iw = 0; iw < nw; ++iw) {
        const double d = grid.w[iw] - ref;
        second += wxy * ww[iw] * sample(ix, iy, iw) * d * d;
      }
    }
  }

  SpreadResult out;
  out.reference_used = ref;
  const double spread = std::sqrt(second / total);
  if (grid.axis == SpectralAxis::Time) {
    out.delta_t = spread;
  } else {
    out.delta_E = spread;
  }
  return out;
}

}  // namespace tempus::uncertainty
