#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "tempus/errors.hpp"

// Energy-time uncertainty relations: process-dependent minimal-time bounds,
// the transition-probability density and its maxima, the strengthened
// Robertson-Schrodinger inequality on finite-dimensional operator pairs,
// Mandelstam-Tamm projector bounds, and position-resolved wavepacket
// spreads. Energies are in eV unless a member name says otherwise.

namespace tempus::uncertainty {

enum class ProcessKind { StableTransfer, Decay, Transmutation };

// Bound constant in units of hbar: pi, pi/4, or 1/2.
double bound_constant(ProcessKind kind);

struct MinimalTime {
  double seconds;
  ProcessKind kind;
  // Both deviations of the underlying relation may be simultaneously
  // negative (advanced emission / instantaneous tunneling).
  bool simultaneous_negative_allowed = true;
};

// Minimal time bound_constant(kind) * hbar / |delta_E|.
MinimalTime minimal_time(double delta_E_eV, ProcessKind kind);

// Unnormalized transition-probability density sin^2(dE tau / 2 hbar) / dE^2
// (eV^-2); the analytic limit tau^2/(4 hbar^2) is returned at dE = 0.
double transition_probability(double delta_E_eV, double tau_s);

// tau of the n-th maximum of the density above (at dE tau/2hbar = pi/2 + n pi),
// located numerically: golden-section search over the bracketing zeros, then
// bisection on the central-difference slope. Treats the density as a black box.
double transition_maximum_tau(double delta_E_eV, int n);

struct OperatorPairState {
  Eigen::MatrixXcd a;
  Eigen::MatrixXcd b;
  Eigen::VectorXcd psi;
};

struct RsBound {
  double lhs;              // Var(A) Var(B)
  double commutator_term;  // |<AB-BA>|^2 / 4
  double covariance_term;  // (<AB+BA> - 2<A><B>)^2 / 4
};

// Strengthened (Schrodinger) uncertainty product. Guarantees
// lhs >= commutator_term + covariance_term up to rounding. Validates
// hermiticity, unit norm, and matching dimensions (tolerance tol).
RsBound rs_bound(const OperatorPairState& state, double tol = 1e-9);

struct ProjectorBound {
  double lower;    // cos^2(dH t/hbar), or sinh^2(|dH| t/hbar) on the virtual branch
  double upper;    // always 1
  bool saturated;  // virtual branch only: lower reached/passed the upper bound
  // Stable: completion time pi hbar/dH. Decay: half time pi hbar/(4 dH).
  // Transmutation (virtual, imaginary dH): arcsinh(1) hbar/|dH|.
  double characteristic_time_s;
};

// Mandelstam-Tamm projector bound on <P(t)>. StableTransfer and Decay use
// the real-deviation branch cos^2; Transmutation selects the virtual branch
// (pure imaginary dH represented by its magnitude), whose sinh^2 lower bound
// saturates near |dH| t / hbar ~ 1.
ProjectorBound mt_projector_bound(double delta_H_eV, double t_s,
                                  ProcessKind kind);

enum class SpectralAxis { Time, Energy };

// |psi|^2 sampled on a rectangular (x, y, z, w) grid; w is either a time
// axis (seconds) or an energy axis (eV). Samples are row-major with w
// fastest: index = ((ix ny + iy) nz + iz) nw + iw.
struct WavepacketGrid {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;
  std::vector<double> w;
  SpectralAxis axis = SpectralAxis::Time;
  std::vector<double> samples;
  std::optional<double> reference;  // t0 or E0; slice weighted mean when unset

  std::size_t size() const { return x.size() * y.size() * z.size() * w.size(); }
  void validate() const;  // shapes, nonnegativity
};

struct SpreadResult {
  std::optional<double> delta_t;  // set for a Time axis
  std::optional<double> delta_E;  // set for an Energy axis
  double reference_used;
};

// Weighted second moment about the reference along the spectral axis of one
// z-slice, by trapezoidal quadrature over (x, y, w) on the supplied grid.
SpreadResult wigner_spreads(const WavepacketGrid& grid, std::size_t z_index);

}  // namespace tempus::uncertainty
