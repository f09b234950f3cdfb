#include "tempus/medium.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "tempus/constants.hpp"

namespace tempus::medium {

namespace {

constexpr double kPi = constants::pi;
constexpr double kC = constants::c_m_per_s;
constexpr double kSigmaT = constants::sigma_thomson_m2;

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw NonPositiveError(std::string(name) + " must be positive");
  }
}

}  // namespace

double MediumSpec::cross_section(std::optional<double> lambda,
                                 std::optional<double> delta_omega) const {
  switch (sigma_model) {
    case CrossSectionModel::Explicit:
      require_positive(sigma, "sigma");
      return sigma;
    case CrossSectionModel::Thomson:
      return kSigmaT;
    case CrossSectionModel::Resonant: {
      if (!resonance || !lambda || !delta_omega) {
        throw UnderdeterminedError(
            "resonant cross-section needs resonance parameters, lambda and "
            "detuning");
      }
      return resonant_cross_section(*lambda, resonance->gamma, *delta_omega);
    }
  }
  throw ConfigError("unknown cross-section model");
}

MediumSpec parse_medium_config(std::istream& in) {
  MediumSpec spec;
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    // accept "key value" and "key = value"
    std::string value;
    ls >> value;
    if (value == "=") ls >> value;
    if (value.empty()) {
      throw ParseError(lineno, "missing value for key '" + key + "'");
    }
    kv[key] = value;
  }

  const auto number = [&](const std::string& key) {
    std::size_t pos = 0;
    const double v = std::stod(kv.at(key), &pos);
    if (pos != kv.at(key).size()) {
      throw ConfigError("malformed number for key '" + key + "'");
    }
    return v;
  };

  bool resonant = false;
  if (kv.count("sigma_model")) {
    const std::string& m = kv["sigma_model"];
    if (m == "thomson") {
      spec.sigma_model = CrossSectionModel::Thomson;
    } else if (m == "resonant") {
      spec.sigma_model = CrossSectionModel::Resonant;
      resonant = true;
    } else if (m == "explicit") {
      spec.sigma_model = CrossSectionModel::Explicit;
    } else {
      throw ConfigError("sigma_model must be explicit, thomson or resonant");
    }
  }
  if (kv.count("sigma")) {
    spec.sigma = number("sigma");
    require_positive(spec.sigma, "sigma");
  }
  if (kv.count("rho")) {
    spec.rho = number("rho");
    require_positive(spec.rho, "rho");
  }
  if (kv.count("n")) {
    spec.n = number("n");
    require_positive(spec.n, "n");
  }
  if (kv.count("omega0") || kv.count("gamma") || resonant) {
    if (!kv.count("omega0") || !kv.count("gamma")) {
      throw ConfigError("resonance needs both omega0 and gamma");
    }
    Resonance res{number("omega0"), number("gamma")};
    require_positive(res.gamma, "gamma");
    spec.resonance = res;
  }
  return spec;
}

double free_path(double rho, double sigma) {
  require_positive(rho, "rho");
  require_positive(sigma, "sigma");
  return 1.0 / (rho * sigma);
}

ConditionResult tunneling_condition(double delta_omega, double rho,
                                    double sigma) {
  require_positive(std::abs(delta_omega), "delta_omega");
  const double formation = kPi * kC / std::abs(delta_omega);
  const double ell = free_path(rho, sigma);
  return {formation > ell, formation / ell};
}

ConditionResult wavelength_condition(double lambda, double rho) {
  require_positive(lambda, "lambda");
  require_positive(rho, "rho");
  const double threshold = 2.0 / (rho * kSigmaT);
  return {lambda > threshold, lambda / threshold};
}

double resonant_cross_section(double lambda, double gamma,
                              double delta_omega) {
  require_positive(lambda, "lambda");
  require_positive(gamma, "gamma");
  return lambda * lambda * gamma * gamma /
         (kPi * (delta_omega * delta_omega + 0.25 * gamma * gamma));
}

ConditionResult resonance_condition(double delta_omega, double rho,
                                    double lambda) {
  require_positive(std::abs(delta_omega), "delta_omega");
  require_positive(rho, "rho");
  require_positive(lambda, "lambda");
  const double threshold = kC * rho * lambda * lambda;
  return {std::abs(delta_omega) <= threshold,
          threshold / std::abs(delta_omega)};
}

TransitPrediction transit_prediction(const TransitInput& in) {
  require_positive(in.length_m, "L");

  TransitPrediction out{};
  // Free path: microscopic route first, rough index route as fallback.
  std::optional<double> ell;
  if (in.medium.rho > 0.0 &&
      (in.medium.sigma_model != CrossSectionModel::Explicit ||
       in.medium.sigma > 0.0)) {
    std::optional<double> lambda;
    std::optional<double> detuning;
    if (in.medium.sigma_model == CrossSectionModel::Resonant && in.omega &&
        in.medium.resonance) {
      lambda = 2.0 * kPi * kC / *in.omega;
      detuning = *in.omega - in.medium.resonance->omega0;
    }
    ell = free_path(in.medium.rho, in.medium.cross_section(lambda, detuning));
  } else if (in.omega && in.medium.n != 1.0) {
    require_positive(*in.omega, "omega");
    ell = kC / (2.0 * *in.omega * (in.medium.n - 1.0));
    out.free_path_is_estimate = true;
  }

  // Jump closure.
  std::optional<double> jump;
  switch (in.closure) {
    case JumpClosure::ExplicitJump:
      if (in.delta_ell_m < 0.0) {
        throw NonPositiveError("explicit jump must be >= 0");
      }
      jump = in.delta_ell_m;
      if (!ell) throw UnderdeterminedError("explicit jump needs a free path");
      out.jump_ratio = *jump / *ell;
      break;
    case JumpClosure::HalfWavelength:
      if (!in.omega) {
        throw UnderdeterminedError("half-wavelength closure needs omega");
      }
      require_positive(*in.omega, "omega");
      jump = kPi * kC / *in.omega;  // pi c/|dw| with dw -> omega, = lambda/2
      if (!ell) throw UnderdeterminedError("half-wavelength closure needs a free path");
      out.jump_ratio = *jump / *ell;
      break;
    case JumpClosure::PaperIndexClosure:
      out.jump_ratio = 2.0 * kPi * (in.medium.n - 1.0);
      if (ell) jump = out.jump_ratio * *ell;
      break;
  }

  out.free_path_m = ell;
  out.jump_m = jump;
  out.speed_ratio = 1.0 + out.jump_ratio;

  if (in.tau1_s != 0.0 && !ell) {
    throw UnderdeterminedError(
        "group index with nonzero tau1 needs a free path; supply rho+sigma or "
        "omega");
  }
  out.group_index = ell ? 1.0 + kC * in.tau1_s / *ell : 1.0;
  out.corrected_index = 1.0 + (out.group_index - 1.0) / (1.0 + out.jump_ratio);
  out.negative_group_index = out.group_index < 0.0;

  if (ell) {
    out.scatter_count = in.length_m / *ell;
    out.corrected_count = in.length_m / (*ell + *jump);
  }
  out.effective_length_m = in.length_m / (1.0 + out.jump_ratio);
  return out;
}

}  // namespace tempus::medium
