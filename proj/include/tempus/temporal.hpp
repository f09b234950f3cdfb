#pragma once

#include <complex>
#include <functional>

#include "tempus/errors.hpp"

// Temporal functions of scattering: Wigner-Smith delay tau1 and formation
// ("dressing") time tau2, both components of the complex log-derivative
//
//   tau(omega) = (1/i) d ln S / d omega,   tau1 = Re tau,  tau2 = Im tau.
//
// Every closed-form branch below is derived from this one generating
// definition applied to the corresponding Green function, so the signs of
// all branches are mutually consistent (the massless limit of the massive
// branch reproduces the mixed-representation photon result).

namespace tempus::temporal {

struct TemporalPair {
  double tau1;  // delay, seconds (natural units for the massive branch)
  double tau2;  // formation, seconds; negative = advanced/instantaneous
};

// Caller-supplied spectral response S(omega, k). The declared interval
// [omega_min, omega_max] bounds the differentiation stencil; eval must be
// finite on it. k is carried through untouched when uses_k is false.
struct SpectralResponse {
  std::function<std::complex<double>(double omega, double k)> eval;
  double omega_min;
  double omega_max;
  bool uses_k = false;
};

struct DiffOptions {
  double zero_floor = 1e-300;  // |S| at or below this raises ZeroResponse
  bool richardson = false;     // one Richardson step on the central difference
};

// Central difference of ln S at omega with branch-continuous phase
// unwrapping across the stencil. step is the one-sided stencil width.
TemporalPair temporal_pair(const SpectralResponse& s, double omega, double k,
                           double step, const DiffOptions& opt = {});

// Convenience builders for common closed-form responses.
SpectralResponse phase_delay_response(double t0);                  // exp(i w t0)
SpectralResponse log_slope_response(double big_omega);             // exp(-w/Omega)
SpectralResponse phase_and_slope_response(double t0, double big_omega);
SpectralResponse lorentzian_response(double omega0, double gamma);  // 1/(w-w0+iG/2)

// Weight of the delta(omega - |k|) term carried by the on-shell delay of the
// free photon propagator. Reported through OnShellError, never as a float.
inline constexpr double on_shell_delta_weight = -3.141592653589793238462643383279502884;

// Free-propagator times at (omega, |k|): tau1 = 0 off shell, tau2 =
// 1/(omega - |k| c) seconds. Within epsilon of the shell (relative to
// max(|omega|, |k|c)) throws OnShellError for the delta-supported delay.
TemporalPair photon_propagator_times(double omega, double k_abs,
                                     double epsilon = 1e-9);

// Mixed-representation formation time tau2(omega, r) = -(r/c) cot(omega r/c).
// PoleError within epsilon of x = omega r/c = n pi (n >= 0).
double mixed_formation_time(double omega, double r, double epsilon = 1e-9);

// Coulomb-renormalized formation time: the 1/x pole of the cotangent (the
// permanently undressed static field) subtracted,
//
//   tau2_renorm = -(r/c) sum_{n>=1} 2x/(x^2 - pi^2 n^2),   x = omega r/c,
//
// evaluated as n_terms direct terms plus an Euler-Maclaurin tail estimate.
// Equals mixed_formation_time + (r/c)/x in the converged limit; first pole
// at x = pi.
double renormalized_formation_time(double omega, double r, long n_terms,
                                   double epsilon = 1e-9);

// Minimal formation path pi c / |delta_omega|; the distance of the
// instantaneous jump at the act of formation (lambda/2 when the detuning
// approaches the frequency itself).
double formation_path(double delta_omega);

// Massive-particle state in natural units (hbar = c = 1): r is a length in
// inverse-energy units, so kappa r is dimensionless.
struct MassiveState {
  double energy;  // E > 0
  double mass;    // m >= 0
  double r;       // r > 0
};

// Temporal pair of the massive Green function Delta_1 = sin(kappa r)/2r,
// kappa = sqrt(E^2 - m^2):
//
//   E > m:  tau1 = 0,                      tau2 = -(rE/kappa)  cot(kappa  r)
//   E < m:  tau1 = (rE/kappa') coth(kappa' r),  tau2 = 0,  kappa' = sqrt(m^2-E^2)
//
// The E < m value is the purely imaginary continuation of the E > m branch
// (cot(iy) = -i coth y) read with delay and formation roles interchanged.
// OnShellError at E = m; PoleError at kappa r = n pi.
TemporalPair massive_temporal(const MassiveState& state, double epsilon = 1e-9);

// Leading (Coulomb-free) term of the E > m formation time,
// -E/(E^2 - m^2) ~ -1/(2 dE): negative for all E > m, i.e. advanced.
double massive_formation_leading(double energy, double mass);

}  // namespace tempus::temporal
