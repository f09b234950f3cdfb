#pragma once

#include <istream>
#include <optional>

#include "tempus/errors.hpp"

// Feasibility conditions for superluminal transfer in a scattering medium
// and the deterministic group-index / jump-corrected transit model. SI
// units throughout.

namespace tempus::medium {

enum class CrossSectionModel { Explicit, Thomson, Resonant };

struct Resonance {
  double omega0;  // rad/s
  double gamma;   // rad/s
};

struct MediumSpec {
  double rho = 0.0;  // scatterers per m^3
  CrossSectionModel sigma_model = CrossSectionModel::Explicit;
  double sigma = 0.0;  // m^2, Explicit model only
  double n = 1.0;      // phase refractive index
  std::optional<Resonance> resonance;

  // Cross-section under the selected model; the Resonant model needs the
  // wavelength and detuning of the probe.
  double cross_section(std::optional<double> lambda = {},
                       std::optional<double> delta_omega = {}) const;
};

// Key-value text config; keys: rho, sigma | sigma_model (explicit value vs
// thomson/resonant), n, omega0, gamma. SI units mandatory, '#' comments.
MediumSpec parse_medium_config(std::istream& in);

// Mean free path 1/(rho sigma).
double free_path(double rho, double sigma);

struct ConditionResult {
  bool satisfied;
  double margin;  // ratio of the two compared quantities; 1 at equality
};

// Necessary tunneling condition: formation path pi c/|dw| exceeds the free
// path 1/(rho sigma). margin = formation_path / free_path.
ConditionResult tunneling_condition(double delta_omega, double rho,
                                    double sigma);

// Long-wavelength condition lambda > 2/(rho sigma_T) for Thomson-dominated
// scattering. margin = lambda rho sigma_T / 2.
ConditionResult wavelength_condition(double lambda, double rho);

// Resonant cross-section lambda^2 Gamma^2 / pi [dw^2 + Gamma^2/4]
// (angular-momentum factors omitted).
double resonant_cross_section(double lambda, double gamma, double delta_omega);

// Near-resonance condition |dw| <= c rho lambda^2 (caller asserts |dw| < Gamma
// applicability). margin = c rho lambda^2 / |dw|.
ConditionResult resonance_condition(double delta_omega, double rho,
                                    double lambda);

enum class JumpClosure {
  ExplicitJump,     // caller-supplied delta_ell
  HalfWavelength,   // delta_ell = pi c / omega (detuning -> omega limit)
  PaperIndexClosure  // delta_ell / ell = 2 pi (n - 1); the headline closure
};

struct TransitInput {
  MediumSpec medium;
  double tau1_s = 0.0;
  double delta_ell_m = 0.0;  // ExplicitJump closure
  double length_m = 1.0;     // slab length L
  std::optional<double> omega;  // rad/s; enables the rough ell = c/2w(n-1) path
  JumpClosure closure = JumpClosure::PaperIndexClosure;
};

struct TransitPrediction {
  std::optional<double> free_path_m;  // absent when no path to ell is supplied
  std::optional<double> jump_m;
  double jump_ratio;        // delta_ell / ell, always determined
  double group_index;       // n_g = 1 + c tau1 / ell
  double corrected_index;   // n_g' = 1 + (n_g - 1)/(1 + jump_ratio)
  double speed_ratio;       // u/c = 1 + jump_ratio
  std::optional<double> scatter_count;    // N  = L / ell
  std::optional<double> corrected_count;  // N' = L / (ell + delta_ell)
  double effective_length_m;              // L_eff = L / (1 + jump_ratio)
  bool negative_group_index;  // anomalous-dispersion flag, value not clamped
  bool free_path_is_estimate;  // ell came from the rough ell = c/2w(n-1)
};

// Deterministic transit model. ell comes from (rho, sigma) when the medium
// supplies them, else from the rough index route when omega is given. The
// paper closure fixes only the ratio delta_ell/ell, so it stays computable
// with ell undetermined as long as tau1 = 0; otherwise UnderdeterminedError.
TransitPrediction transit_prediction(const TransitInput& in);

}  // namespace tempus::medium
