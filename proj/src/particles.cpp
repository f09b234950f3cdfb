#include "tempus/particles.hpp"

#include <cmath>
#include <sstream>

#include "tempus/constants.hpp"

namespace tempus::particles {

namespace {

constexpr double kHbarMeV = constants::hbar_MeV_s;
constexpr double kHbarEV = constants::hbar_eV_s;
constexpr double kC = constants::c_m_per_s;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_number(const std::string& token, std::size_t lineno,
                    const char* field) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, std::string("malformed ") + field + " '" + token + "'");
  }
}

}  // namespace

std::string to_string(TauKind kind) {
  switch (kind) {
    case TauKind::ShortLivedPartner:
      return "short_lived_partner";
    case TauKind::MeanLifetime:
      return "mean_lifetime";
    case TauKind::DeltaMLowerBound:
      return "delta_m_lower_bound";
  }
  return "?";
}

TauKind tau_kind_from_string(const std::string& token) {
  if (token == "short_lived_partner") return TauKind::ShortLivedPartner;
  if (token == "mean_lifetime") return TauKind::MeanLifetime;
  if (token == "delta_m_lower_bound") return TauKind::DeltaMLowerBound;
  throw ConfigError("unknown tau_kind '" + token + "'");
}

UncertaintyProduct uncertainty_product(const TransmutationRecord& record,
                                       double window) {
  if (!record.tau_s) {
    throw MissingFieldError("record '" + record.pair_name +
                            "' has no lifetime");
  }
  if (!(record.delta_m_MeV > 0.0) || !(*record.tau_s > 0.0)) {
    throw NonPositiveError("delta_m and tau must be positive");
  }
  const double v = record.delta_m_MeV * *record.tau_s / kHbarMeV;
  ProductClass cls = ProductClass::Near;
  if (v < 0.5 - window) cls = ProductClass::Below;
  if (v > 0.5 + window) cls = ProductClass::Above;
  return {v, cls};
}

double lifetime_bound(double delta_m_lower_MeV, double factor) {
  if (!(delta_m_lower_MeV > 0.0) || !(factor > 0.0)) {
    throw NonPositiveError("delta_m bound and factor must be positive");
  }
  return factor * kHbarMeV / delta_m_lower_MeV;
}

std::vector<TransmutationEdge> allowed_transmutations(
    const MassHierarchy& hierarchy, TiePolicy ties) {
  const auto& sp = hierarchy.species;
  std::vector<TransmutationEdge> edges;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    for (std::size_t j = i + 1; j < sp.size(); ++j) {
      if (sp[i].second == sp[j].second) {
        if (ties == TiePolicy::Error) {
          throw TieError("species '" + sp[i].first + "' and '" + sp[j].first +
                         "' share a mass rank");
        }
        continue;
      }
      const bool i_lighter = sp[i].second < sp[j].second;
      const auto& light = i_lighter ? sp[i].first : sp[j].first;
      const auto& heavy = i_lighter ? sp[j].first : sp[i].first;
      edges.push_back({light, heavy, true});
      edges.push_back({heavy, light, false});
    }
  }
  return edges;
}

NeutrinoEstimate neutrino_mass_estimate(double L_km, double E_GeV) {
  if (!(L_km > 0.0) || !(E_GeV > 0.0)) {
    throw NonPositiveError("L and E must be positive");
  }
  NeutrinoEstimate out;
  out.delta_m2_eV2 = 2.0 * E_GeV / L_km;
  out.tau_s = L_km * 1000.0 / kC;
  out.product_m2_tau_computed = out.delta_m2_eV2 * out.tau_s;
  out.product_m2_tau_paper = 2.0e-11 / 3.0;
  out.product_m_tau_paper = 2.0e-15 / 3.0;
  // The printed chain divides its two product relations; the correctly
  // oriented quotient is 1/dm, and the printed headline reads that number
  // as dm itself. Reproduced as printed, flagged below.
  out.delta_m_paper_eV = out.product_m_tau_paper / out.product_m2_tau_paper;
  out.delta_m_oracle_eV = 0.5 * kHbarEV / out.tau_s;

  auto step = [&](std::string label, double value, std::string unit,
                  std::string note, bool flagged) {
    out.step_log.push_back(
        {std::move(label), value, std::move(unit), std::move(note), flagged});
  };
  step("delta_m2", out.delta_m2_eV2, "eV^2",
       "unit-phase condition dm^2 L / 2E = 1 as printed", false);
  step("tau", out.tau_s, "s", "flight time L/c", false);
  step("product_m2_tau_computed", out.product_m2_tau_computed, "eV^2 s",
       "dm^2 tau evaluated from the two steps above", false);
  step("product_m2_tau_paper", out.product_m2_tau_paper, "eV^2 s",
       "printed rewrite; differs from the computed product by ~1e6, the "
       "rewrite is not dimensionally consistent",
       true);
  step("product_m_tau_paper", out.product_m_tau_paper, "eV s",
       "printed rewrite of the transmutation relation; equals hbar "
       "(6.58e-16 eV s), not hbar/2",
       true);
  step("delta_m_quotient_as_oriented",
       out.product_m2_tau_paper / out.product_m_tau_paper, "eV",
       "quotient of the two printed products in the stated orientation",
       false);
  step("delta_m_paper", out.delta_m_paper_eV, "eV",
       "headline as printed: the inverted quotient (dimensionally 1/dm) "
       "read as dm",
       true);
  step("delta_m_oracle", out.delta_m_oracle_eV, "eV",
       "(hbar/2)/tau with explicit constants; disagrees with the printed "
       "headline by many orders",
       true);
  return out;
}

std::vector<TransmutationRecord> load_particle_table(std::istream& in) {
  std::vector<TransmutationRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;

    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, '|')) fields.push_back(trim(field));
    if (fields.size() != 4) {
      throw ParseError(lineno, "expected 4 '|'-separated fields, got " +
                                   std::to_string(fields.size()));
    }

    TransmutationRecord rec;
    rec.pair_name = fields[0];
    if (rec.pair_name.empty()) {
      throw ParseError(lineno, "empty pair name");
    }
    rec.delta_m_MeV = parse_number(fields[1], lineno, "delta_m");
    if (!(rec.delta_m_MeV > 0.0)) {
      throw ParseError(lineno, "delta_m must be positive (magnitude of the "
                               "mass splitting)");
    }
    if (fields[2] != "-") {
      const double tau = parse_number(fields[2], lineno, "tau");
      if (!(tau > 0.0)) {
        throw ParseError(lineno, "tau must be positive when present");
      }
      rec.tau_s = tau;
    }
    try {
      rec.tau_kind = tau_kind_from_string(fields[3]);
    } catch (const ConfigError& e) {
      throw ParseError(lineno, e.what());
    }
    if (!rec.tau_s && rec.tau_kind != TauKind::DeltaMLowerBound) {
      throw ParseError(lineno, "missing tau for a lifetime-kind row");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_particle_table(std::ostream& out,
                          const std::vector<TransmutationRecord>& records) {
  out << "# pair_name | delta_m_MeV | tau_s | tau_kind\n";
  out.precision(17);
  for (const auto& r : records) {
    out << r.pair_name << " | " << r.delta_m_MeV << " | ";
    if (r.tau_s) {
      out << *r.tau_s;
    } else {
      out << "-";
    }
    out << " | " << to_string(r.tau_kind) << "\n";
  }
}

}  // namespace tempus::particles
