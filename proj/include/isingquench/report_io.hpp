#pragma once

// CSV rows and JSON records for reports. Numbers are written with %.17g so
// that a value survives a round trip and identical inputs give identical
// bytes.

#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "isingquench/entropy.hpp"
#include "isingquench/mps_tebd.hpp"
#include "isingquench/theorem_check.hpp"

namespace isingquench {

inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string format_number(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

/// Writes fields joined by commas and a newline.
inline void write_csv_line(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

// ---------------------------------------------------------------------------
// Bound chain

inline const std::vector<std::string>& bound_chain_columns() {
  static const std::vector<std::string> cols{
      "N",
      "L",
      "t",
      "s_exact_bits",
      "parabola_bound_bits",
      "c_norm_bound_bits",
      "corner_bound_bits",
      "bessel_bound_bits",
      "theorem_bound_bits",
      "parabola_margin_bits",  // s_exact - parabola
      "cnorm_gap_bits",        // parabola - c_norm
      "corner_margin_bits",    // c_norm - corner
      "bessel_margin_bits",    // corner - bessel
      "theorem_margin_bits",   // s_exact - theorem
      "dropped_mass_bits",
      "thermo_corner_bits",
      "bessel_sum_form_bits",
      "error_budget_bits",
      "error_budget_closed_bits",
      "hypotheses_hold",
      "hypothesis_violation",
  };
  return cols;
}

inline std::vector<std::string> bound_chain_fields(const BoundChainReport& r) {
  std::optional<double> bessel_margin;
  if (r.bessel_bound) bessel_margin = r.corner_bound - *r.bessel_bound;
  return {std::to_string(r.N),
          std::to_string(r.L),
          format_number(r.t),
          format_number(r.s_exact),
          format_number(r.parabola_bound),
          format_number(r.c_norm_bound),
          format_number(r.corner_bound),
          format_number(r.bessel_bound),
          format_number(r.theorem_bound),
          format_number(r.s_exact - r.parabola_bound),
          format_number(r.parabola_bound - r.c_norm_bound),
          format_number(r.c_norm_bound - r.corner_bound),
          format_number(bessel_margin),
          format_number(r.theorem_margin()),
          format_number(r.dropped_mass),
          format_number(r.thermo_corner),
          format_number(r.bessel_sum_form),
          format_number(r.error_budget),
          format_number(r.error_budget_closed),
          r.hypotheses_hold() ? "1" : "0",
          r.hypothesis_violation};
}

inline void write_bound_chain_csv(std::ostream& os, const std::vector<BoundChainReport>& rows) {
  write_csv_line(os, bound_chain_columns());
  for (const BoundChainReport& r : rows) write_csv_line(os, bound_chain_fields(r));
}

inline std::vector<BoundChainReport> read_bound_chain_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || split_csv_line(line) != bound_chain_columns()) {
    throw std::runtime_error("read_bound_chain_csv: unexpected header");
  }
  auto opt = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return std::stod(s);
  };
  std::vector<BoundChainReport> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != bound_chain_columns().size()) {
      throw std::runtime_error("read_bound_chain_csv: wrong field count in '" + line + "'");
    }
    BoundChainReport r;
    r.N = std::stoi(f[0]);
    r.L = std::stoi(f[1]);
    r.t = std::stod(f[2]);
    r.s_exact = std::stod(f[3]);
    r.parabola_bound = std::stod(f[4]);
    r.c_norm_bound = std::stod(f[5]);
    r.corner_bound = std::stod(f[6]);
    r.bessel_bound = opt(f[7]);
    r.theorem_bound = opt(f[8]);
    r.dropped_mass = std::stod(f[14]);
    r.thermo_corner = std::stod(f[15]);
    r.bessel_sum_form = std::stod(f[16]);
    r.error_budget = std::stod(f[17]);
    r.error_budget_closed = std::stod(f[18]);
    r.hypothesis_violation = f[20];
    out.push_back(std::move(r));
  }
  return out;
}

inline void to_json(nlohmann::json& j, const BoundChainReport& r) {
  j = nlohmann::json{{"N", r.N},
                     {"L", r.L},
                     {"t", r.t},
                     {"s_exact_bits", r.s_exact},
                     {"parabola_bound_bits", r.parabola_bound},
                     {"c_norm_bound_bits", r.c_norm_bound},
                     {"corner_bound_bits", r.corner_bound},
                     {"bessel_bound_bits", nullptr},
                     {"theorem_bound_bits", nullptr},
                     {"theorem_margin_bits", nullptr},
                     {"diagnostics",
                      {{"dropped_mass_bits", r.dropped_mass},
                       {"thermo_corner_bits", r.thermo_corner},
                       {"bessel_sum_form_bits", r.bessel_sum_form},
                       {"error_budget_bits", r.error_budget},
                       {"error_budget_closed_bits", r.error_budget_closed}}},
                     {"hypotheses_hold", r.hypotheses_hold()},
                     {"hypothesis_violation", r.hypothesis_violation}};
  if (r.bessel_bound) j["bessel_bound_bits"] = *r.bessel_bound;
  if (r.theorem_bound) j["theorem_bound_bits"] = *r.theorem_bound;
  if (auto m = r.theorem_margin()) j["theorem_margin_bits"] = *m;
}

struct TheoremSummary {
  int points = 0;
  int applicable = 0;
  int passed = 0;
  int failed = 0;
  std::optional<double> min_margin;
};

inline TheoremSummary summarize(const std::vector<TheoremCheck>& checks) {
  TheoremSummary s;
  for (const TheoremCheck& c : checks) {
    ++s.points;
    if (!c.applicable) continue;
    ++s.applicable;
    c.holds ? ++s.passed : ++s.failed;
    const double m = *c.report.theorem_margin();
    if (!s.min_margin || m < *s.min_margin) s.min_margin = m;
  }
  return s;
}

inline void to_json(nlohmann::json& j, const TheoremSummary& s) {
  j = nlohmann::json{{"points", s.points},
                     {"applicable", s.applicable},
                     {"passed", s.passed},
                     {"failed", s.failed},
                     {"min_margin_bits", nullptr}};
  if (s.min_margin) j["min_margin_bits"] = *s.min_margin;
}

// ---------------------------------------------------------------------------
// TEBD time series

inline const std::vector<std::string>& quench_columns() {
  static const std::vector<std::string> cols{
      "t",
      "max_bond",
      "half_chain_entropy_bits",
      "error_proxy",
      "fidelity",
      "state_distance",
      "log2_bond_bound_bits",
      "bound_consistent",
  };
  return cols;
}

inline std::vector<std::string> quench_fields(const QuenchSample& s) {
  std::string consistent;
  if (s.bound_consistent) consistent = *s.bound_consistent ? "1" : "0";
  return {format_number(s.t),
          std::to_string(s.max_bond),
          format_number(s.half_chain_entropy),
          format_number(s.error_proxy),
          format_number(s.fidelity),
          format_number(s.state_distance),
          format_number(s.log2_bond_bound),
          consistent};
}

inline void write_quench_csv(std::ostream& os, const std::vector<QuenchSample>& samples) {
  write_csv_line(os, quench_columns());
  for (const QuenchSample& s : samples) write_csv_line(os, quench_fields(s));
}

inline void to_json(nlohmann::json& j, const QuenchSample& s) {
  j = nlohmann::json{{"t", s.t},
                     {"max_bond", s.max_bond},
                     {"bond_profile", s.bond_profile},
                     {"cut_entropies_bits", s.cut_entropies},
                     {"half_chain_entropy_bits", s.half_chain_entropy},
                     {"error_proxy", s.error_proxy},
                     {"fidelity", nullptr},
                     {"state_distance", nullptr},
                     {"log2_bond_bound_bits", nullptr},
                     {"bound_consistent", nullptr}};
  if (s.fidelity) j["fidelity"] = *s.fidelity;
  if (s.state_distance) j["state_distance"] = *s.state_distance;
  if (s.log2_bond_bound) j["log2_bond_bound_bits"] = *s.log2_bond_bound;
  if (s.bound_consistent) j["bound_consistent"] = *s.bound_consistent;
}

}  // namespace isingquench
