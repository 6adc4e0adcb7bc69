// isingquench: runs the exact, oracle and TEBD experiments and writes
// CSV tables plus a JSON manifest per run.

#include <Eigen/Core>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isingquench/bounds.hpp"
#include "isingquench/cross_check.hpp"
#include "isingquench/ed_oracle.hpp"
#include "isingquench/entropy.hpp"
#include "isingquench/ising_exact.hpp"
#include "isingquench/lemma_checks.hpp"
#include "isingquench/mps_tebd.hpp"
#include "isingquench/parallel.hpp"
#include "isingquench/report_io.hpp"
#include "isingquench/theorem_check.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace isingquench;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kInvalidConfig = 1, kViolation = 2 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

struct Common {
  std::string output_dir = "isingquench-out";
  unsigned long long seed = 20240101;
  unsigned threads = 1;
};

struct RunResult {
  int exit_code = kOk;
  json parameters;
  json summary;
  std::vector<std::string> outputs;
};

std::vector<double> arithmetic_grid(double lo, double hi, double step) {
  require(step > 0.0, "t-step must be > 0");
  require(hi >= lo, "t-max must be >= t-min");
  std::vector<double> g;
  const long n = std::lround(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= n; ++i) g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

std::ofstream open_output(const Common& common, const std::string& name, RunResult& result) {
  const fs::path p = fs::path(common.output_dir) / name;
  std::ofstream os(p);
  if (!os) throw std::runtime_error("cannot open " + p.string() + " for writing");
  result.outputs.push_back(name);
  return os;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json versions() {
  return {{"isingquench", kVersion},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"cli11", CLI11_VERSION},
          {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
          {"compiler", __VERSION__}};
}

// ---------------------------------------------------------------------------

struct EntropyCurve {
  int N = 101;
  int L = 20;
  double t_min = 0.0;
  double t_max = 13.0;
  double t_step = 0.5;
  std::string limit = "finite";
  std::optional<double> renyi_alpha;
  bool export_cm = false;

  void add(CLI::App& app) {
    app.add_option("--N", N, "ring length")->capture_default_str();
    app.add_option("--L", L, "block length")->capture_default_str();
    app.add_option("--t-min", t_min)->capture_default_str();
    app.add_option("--t-max", t_max)->capture_default_str();
    app.add_option("--t-step", t_step)->capture_default_str();
    app.add_option("--limit", limit, "finite or thermodynamic")
        ->check(CLI::IsMember({"finite", "thermodynamic"}))
        ->capture_default_str();
    app.add_option("--renyi-alpha", renyi_alpha, "also report the Renyi entropy of this order");
    app.add_flag("--export-cm", export_cm, "write the correlation matrix at every grid time");
  }

  RunResult run(const Common& common) const {
    require(N >= 1, "N must be >= 1");
    require(L >= 1 && L <= N, "L must satisfy 1 <= L <= N");
    require(t_min >= 0.0, "t-min must be >= 0");
    if (renyi_alpha) require(*renyi_alpha > 0.0 && *renyi_alpha != 1.0, "renyi-alpha must be > 0 and != 1");
    const std::vector<double> grid = arithmetic_grid(t_min, t_max, t_step);
    const Limit lim = limit == "finite" ? Limit::finite : Limit::thermodynamic;

    struct Row {
      std::optional<CorrelationMatrix> gamma;  // kept only for export
      BlockSpectrum spectrum;
    };
    const std::vector<Row> rows = parallel_map(
        grid.size(),
        [&](std::size_t i) {
          CorrelationMatrix g = gamma_t_fourier(N, grid[i], lim);
          BlockSpectrum s = normal_modes(block_submatrix(g, L));
          return Row{export_cm ? std::optional(std::move(g)) : std::nullopt, std::move(s)};
        },
        common.threads);

    RunResult r;
    r.parameters = {{"N", N},           {"L", L},         {"t_min", t_min},
                    {"t_max", t_max},   {"t_step", t_step}, {"limit", limit},
                    {"renyi_alpha", renyi_alpha ? json(*renyi_alpha) : json(nullptr)},
                    {"export_cm", export_cm}};
    std::ofstream os = open_output(common, "entropy-curve.csv", r);
    std::vector<std::string> header{"t", "s_bits", "theorem_bound_bits", "hypotheses_hold", "in_range"};
    if (renyi_alpha) header.insert(header.begin() + 2, "renyi_bits");
    write_csv_line(os, header);
    int out_of_range = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double s = block_entropy(rows[i].spectrum);
      const bool ok = s >= -1e-10 && s <= L + 1e-10;
      out_of_range += ok ? 0 : 1;
      const TheoremHypotheses hyp{N, L, grid[i]};
      std::vector<std::string> f{format_number(grid[i]), format_number(s),
                                 hyp.holds() ? format_number(theorem1_bound(grid[i])) : "",
                                 hyp.holds() ? "1" : "0", ok ? "1" : "0"};
      if (renyi_alpha) f.insert(f.begin() + 2, format_number(renyi_entropy(rows[i].spectrum, *renyi_alpha)));
      write_csv_line(os, f);
      if (export_cm) {
        std::ofstream cm = open_output(common, "cm_t" + std::to_string(i) + ".csv", r);
        write_csv(cm, *rows[i].gamma, grid[i]);
      }
    }
    r.summary = {{"points", grid.size()}, {"out_of_range", out_of_range}};
    r.exit_code = out_of_range == 0 ? kOk : kViolation;
    return r;
  }
};

struct VerifyTheorem {
  int N = 101;
  int L = 20;
  std::vector<double> t_grid{4, 5, 6, 7, 8, 9, 10, 11, 12, 13};

  void add(CLI::App& app) {
    app.add_option("--N", N, "ring length")->capture_default_str();
    app.add_option("--L", L, "block length")->capture_default_str();
    app.add_option("--t-grid", t_grid, "comma-separated times")->delimiter(',')->capture_default_str();
  }

  RunResult run(const Common& common) const {
    require(N >= 2, "N must be >= 2");
    require(L >= 1 && 2 * L <= N, "L must satisfy 1 <= L <= N/2");
    require(!t_grid.empty(), "t-grid must be nonempty");
    for (double t : t_grid) require(t >= 0.0, "t-grid entries must be >= 0");

    const std::vector<TheoremCheck> checks = verify_theorem1(N, L, t_grid, common.threads);
    RunResult r;
    r.parameters = {{"N", N}, {"L", L}, {"t_grid", t_grid}};
    std::vector<BoundChainReport> reports;
    for (const TheoremCheck& c : checks) reports.push_back(c.report);
    std::ofstream os = open_output(common, "verify-theorem.csv", r);
    write_bound_chain_csv(os, reports);
    const TheoremSummary s = summarize(checks);
    r.summary = s;
    r.exit_code = s.failed == 0 ? kOk : kViolation;
    return r;
  }
};

struct BesselCheck {
  double lemma1_z_max = 50.0;
  int lemma1_cutoff_offset = 80;
  int lemma2_k_max = 60;
  int lemma2_z_points = 40;
  int lemma2_tail = 200;
  double lemma3_z_max = 100.0;
  double z_step = 0.1;

  void add(CLI::App& app) {
    app.add_option("--lemma1-z-max", lemma1_z_max)->capture_default_str();
    app.add_option("--lemma1-cutoff-offset", lemma1_cutoff_offset)->capture_default_str();
    app.add_option("--lemma2-k-max", lemma2_k_max)->capture_default_str();
    app.add_option("--lemma2-z-points", lemma2_z_points)->capture_default_str();
    app.add_option("--lemma2-tail", lemma2_tail)->capture_default_str();
    app.add_option("--lemma3-z-max", lemma3_z_max)->capture_default_str();
    app.add_option("--z-step", z_step)->capture_default_str();
  }

  RunResult run(const Common& common) const {
    require(lemma1_z_max >= 1.0 && lemma3_z_max >= 1.0, "z-max values must be >= 1");
    require(z_step > 0.0, "z-step must be > 0");
    require(lemma1_cutoff_offset >= 0, "lemma1-cutoff-offset must be >= 0");
    require(lemma2_k_max >= 2, "lemma2-k-max must be >= 2");
    require(lemma2_z_points >= 1 && lemma2_tail >= 1, "lemma2 grid sizes must be >= 1");

    std::vector<LemmaCheck> all = check_lemma1(lemma1_z_max, z_step, lemma1_cutoff_offset);
    for (const LemmaCheck& c : check_lemma2(lemma2_k_max, lemma2_z_points, lemma2_tail)) all.push_back(c);
    for (const LemmaCheck& c : check_lemma3(lemma3_z_max, z_step)) all.push_back(c);

    RunResult r;
    r.parameters = {{"lemma1_z_max", lemma1_z_max},       {"lemma1_cutoff_offset", lemma1_cutoff_offset},
                    {"lemma2_k_max", lemma2_k_max},       {"lemma2_z_points", lemma2_z_points},
                    {"lemma2_tail", lemma2_tail},         {"lemma3_z_max", lemma3_z_max},
                    {"z_step", z_step}};
    std::ofstream os = open_output(common, "bessel-check.csv", r);
    write_csv_line(os, {"lemma", "K", "z", "value", "bound", "margin", "holds"});
    json per_lemma = json::object();
    int violations = 0;
    for (const LemmaCheck& c : all) {
      write_csv_line(os, {std::to_string(c.lemma), std::to_string(c.K), format_number(c.z),
                          format_number(c.value), format_number(c.bound), format_number(c.margin),
                          c.holds() ? "1" : "0"});
      json& entry = per_lemma["lemma" + std::to_string(c.lemma)];
      if (entry.is_null()) entry = {{"points", 0}, {"violations", 0}, {"min_margin", c.margin}};
      entry["points"] = entry["points"].get<int>() + 1;
      if (!c.holds()) {
        entry["violations"] = entry["violations"].get<int>() + 1;
        ++violations;
      }
      entry["min_margin"] = std::min(entry["min_margin"].get<double>(), c.margin);
    }
    r.summary = {{"points", all.size()}, {"violations", violations}, {"by_lemma", per_lemma}};
    r.exit_code = violations == 0 ? kOk : kViolation;
    return r;
  }
};

struct OracleCompare {
  std::vector<int> sizes{5, 7, 9, 11};
  std::vector<double> t_grid{0, 0.5, 1, 2, 4};
  double tolerance = 1e-8;

  void add(CLI::App& app) {
    app.add_option("--N", sizes, "comma-separated ring lengths")->delimiter(',')->capture_default_str();
    app.add_option("--t-grid", t_grid, "comma-separated times")->delimiter(',')->capture_default_str();
    app.add_option("--tolerance", tolerance)->capture_default_str();
  }

  RunResult run(const Common& common) const {
    require(!sizes.empty() && !t_grid.empty(), "N and t-grid must be nonempty");
    for (int n : sizes) {
      require(n >= 2 && n <= kMaxCorrelationSites,
              "N entries must lie in [2, " + std::to_string(kMaxCorrelationSites) + "]");
    }
    require(tolerance > 0.0, "tolerance must be > 0");

    std::vector<std::pair<int, double>> jobs;
    for (int n : sizes)
      for (double t : t_grid) jobs.emplace_back(n, t);
    const auto blocks = parallel_map(
        jobs.size(), [&](std::size_t i) { return cross_path_compare(jobs[i].first, jobs[i].second); },
        common.threads);

    RunResult r;
    r.parameters = {{"N", sizes}, {"t_grid", t_grid}, {"tolerance", tolerance}};
    std::ofstream os = open_output(common, "oracle-compare.csv", r);
    write_csv_line(os, {"N", "L", "t", "s_cm_bits", "s_ed_bits", "entropy_deviation_bits",
                        "cm_max_deviation", "within_tolerance"});
    int rows = 0;
    int failures = 0;
    double worst_s = 0.0;
    double worst_cm = 0.0;
    for (const auto& block : blocks) {
      for (const CrossPathRow& row : block) {
        const bool ok = row.entropy_deviation() <= tolerance && row.cm_deviation <= tolerance;
        ++rows;
        failures += ok ? 0 : 1;
        worst_s = std::max(worst_s, row.entropy_deviation());
        worst_cm = std::max(worst_cm, row.cm_deviation);
        write_csv_line(os, {std::to_string(row.N), std::to_string(row.L), format_number(row.t),
                            format_number(row.s_cm), format_number(row.s_ed),
                            format_number(row.entropy_deviation()), format_number(row.cm_deviation),
                            ok ? "1" : "0"});
      }
    }
    r.summary = {{"rows", rows},
                 {"failures", failures},
                 {"max_entropy_deviation_bits", worst_s},
                 {"max_cm_deviation", worst_cm}};
    r.exit_code = failures == 0 ? kOk : kViolation;
    return r;
  }
};

struct TebdRun {
  int N = 20;
  double dt = 0.02;
  double t_final = 6.0;
  int order = 2;
  std::optional<int> max_bond;
  std::optional<double> discard_tol = 1e-10;
  double record_interval = 0.5;
  bool with_fidelity = true;

  void add(CLI::App& app) {
    app.add_option("--N", N, "chain length (open boundary)")->capture_default_str();
    app.add_option("--dt", dt)->capture_default_str();
    app.add_option("--t-final", t_final)->capture_default_str();
    app.add_option("--order", order, "Trotter order, 1 or 2")->capture_default_str();
    app.add_option("--max-bond", max_bond, "bond dimension cap");
    app.add_option("--discard-tol", discard_tol, "discarded weight per truncation")->capture_default_str();
    app.add_option("--record-interval", record_interval)->capture_default_str();
    app.add_option("--with-fidelity", with_fidelity, "compare with exact evolution when N <= 12")
        ->capture_default_str();
  }

  RunResult run(const Common& common) const {
    require(N >= 2, "N must be >= 2");
    require(dt > 0.0, "dt must be > 0");
    require(t_final >= 0.0, "t-final must be >= 0");
    require(order == 1 || order == 2, "order must be 1 or 2");
    require(record_interval > 0.0, "record-interval must be > 0");
    QuenchConfig cfg;
    cfg.N = N;
    cfg.dt = dt;
    cfg.t_final = t_final;
    cfg.order = order;
    cfg.policy = TruncationPolicy{max_bond, discard_tol};
    try {
      cfg.policy.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    cfg.record_interval = record_interval;
    cfg.with_fidelity = with_fidelity;

    const std::vector<QuenchSample> samples = run_quench(cfg);
    RunResult r;
    r.parameters = {{"N", N},
                    {"dt", dt},
                    {"t_final", t_final},
                    {"order", order},
                    {"max_bond", max_bond ? json(*max_bond) : json(nullptr)},
                    {"discard_tol", discard_tol ? json(*discard_tol) : json(nullptr)},
                    {"record_interval", record_interval},
                    {"with_fidelity", with_fidelity},
                    {"boundary", "open"},
                    {"time", "spin time"}};
    std::ofstream os = open_output(common, "tebd-run.csv", r);
    write_quench_csv(os, samples);
    {
      std::ofstream prof = open_output(common, "tebd-run-samples.json", r);
      prof << json(samples).dump(1) << '\n';
    }
    int inconsistent = 0;
    int checked = 0;
    for (const QuenchSample& s : samples) {
      if (!s.bound_consistent) continue;
      ++checked;
      inconsistent += *s.bound_consistent ? 0 : 1;
    }
    const QuenchSample& last = samples.back();
    r.summary = {{"samples", samples.size()},
                 {"final_max_bond", last.max_bond},
                 {"final_half_chain_entropy_bits", last.half_chain_entropy},
                 {"final_error_proxy", last.error_proxy},
                 {"bound_checks", checked},
                 {"bound_inconsistent", inconsistent}};
    r.exit_code = inconsistent == 0 ? kOk : kViolation;
    return r;
  }
};

struct BoundsTable {
  std::vector<double> t_grid{4, 6, 8, 10, 12, 16, 20, 30, 40};
  std::vector<double> epsilons{0.0, 0.05, 0.1, 0.2, 0.3, 0.5, epsilon0};
  int L = 20;
  int continuity_samples = 0;
  int continuity_max_qubits = 6;

  void add(CLI::App& app) {
    app.add_option("--t-grid", t_grid, "comma-separated times")->delimiter(',')->capture_default_str();
    app.add_option("--epsilon", epsilons, "comma-separated trace distances")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--L", L, "block length for the unoptimized approximate bound")->capture_default_str();
    app.add_option("--continuity-samples", continuity_samples,
                   "random density-matrix pairs checked against the continuity bound")
        ->capture_default_str();
    app.add_option("--continuity-max-qubits", continuity_max_qubits)->capture_default_str();
  }

  RunResult run(const Common& common) const {
    require(!t_grid.empty() && !epsilons.empty(), "t-grid and epsilon must be nonempty");
    for (double t : t_grid) require(t > 0.0, "t-grid entries must be > 0");
    for (double e : epsilons) require(e >= 0.0 && e <= 2.0, "epsilon entries must lie in [0, 2]");
    require(L >= 1, "L must be >= 1");
    require(continuity_samples >= 0, "continuity-samples must be >= 0");
    require(continuity_max_qubits >= 1 && continuity_max_qubits <= 6, "continuity-max-qubits must lie in [1, 6]");

    RunResult r;
    r.parameters = {{"t_grid", t_grid},
                    {"epsilon", epsilons},
                    {"L", L},
                    {"continuity_samples", continuity_samples},
                    {"continuity_max_qubits", continuity_max_qubits}};
    std::ofstream os = open_output(common, "bounds-table.csv", r);
    write_csv_line(os, {"t", "epsilon", "theorem1_bound_bits", "approx_bound_bits", "approx_optimized_bits",
                        "approx_optimized_applicable", "log2_D_bound_bits", "min_D", "linear_coefficient_bits"});
    for (double t : t_grid) {
      for (double eps : epsilons) {
        const ApproxEntropyBound a = approx_entropy_lower_bound(t, eps, L);
        const BondDimensionBound d = bond_dim_lower_bound(t, eps);
        write_csv_line(os, {format_number(t), format_number(eps), format_number(theorem1_bound(t)),
                            format_number(a.unoptimized), format_number(a.optimized),
                            a.optimized_applicable ? "1" : "0", format_number(d.log2_D),
                            std::to_string(d.min_D), format_number(d.linear_coefficient)});
      }
    }

    int violations = 0;
    if (continuity_samples > 0) {
      std::mt19937_64 rng(common.seed);
      std::ofstream cs = open_output(common, "continuity.csv", r);
      write_csv_line(cs, {"sample", "L", "global_trace_distance", "reduced_trace_distance", "entropy_gap_bits",
                          "audenaert_bound_bits", "relaxed_bound_bits", "contraction_holds", "audenaert_holds"});
      const int span = continuity_max_qubits >= 2 ? continuity_max_qubits - 1 : 1;
      for (int i = 0; i < continuity_samples; ++i) {
        const int Lq = continuity_max_qubits >= 2 ? 2 + i % span : 1;
        const ContinuitySample s = sample_continuity_pair(Lq, rng);
        const bool ok = s.contraction_holds() && s.audenaert_holds();
        violations += ok ? 0 : 1;
        write_csv_line(cs, {std::to_string(i), std::to_string(Lq), format_number(s.global_distance),
                            format_number(s.reduced_distance), format_number(s.entropy_gap),
                            format_number(s.bound.exact), format_number(s.bound.relaxed),
                            s.contraction_holds() ? "1" : "0", s.audenaert_holds() ? "1" : "0"});
      }
    }
    r.summary = {{"rows", t_grid.size() * epsilons.size()},
                 {"epsilon0", epsilon0},
                 {"continuity_samples", continuity_samples},
                 {"continuity_violations", violations}};
    r.exit_code = violations == 0 ? kOk : kViolation;
    return r;
  }
};

void write_manifest(const Common& common, const std::string& command, const RunResult& r, double seconds) {
  const json manifest = {{"command", command},
                         {"exit_code", r.exit_code},
                         {"parameters", r.parameters},
                         {"seed", common.seed},
                         {"threads", common.threads},
                         {"outputs", r.outputs},
                         {"summary", r.summary},
                         {"versions", versions()},
                         {"timestamp_utc", utc_timestamp()},
                         {"wall_clock_seconds", seconds}};
  std::ofstream os(fs::path(common.output_dir) / (command + ".json"));
  os << manifest.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement growth after a transverse-field Ising quench"};
  app.set_config("--config", "", "TOML or INI file; command-line flags take precedence");
  app.require_subcommand(1);

  Common common;
  app.add_option("--output-dir", common.output_dir, "directory for CSV and JSON outputs")
      ->capture_default_str();
  app.add_option("--seed", common.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--threads", common.threads, "worker threads; 0 uses all cores")->capture_default_str();

  EntropyCurve entropy_curve;
  VerifyTheorem verify_theorem;
  BesselCheck bessel_check;
  OracleCompare oracle_compare;
  TebdRun tebd_run;
  BoundsTable bounds_table;

  auto* c1 = app.add_subcommand("entropy-curve", "block entropy S_L(t) on a time grid");
  auto* c2 = app.add_subcommand("verify-theorem", "exact entropy against the linear lower bound");
  auto* c3 = app.add_subcommand("bessel-check", "grid checks of the Bessel inequalities");
  auto* c4 = app.add_subcommand("oracle-compare", "correlation-matrix path against exact spin evolution");
  auto* c5 = app.add_subcommand("tebd-run", "MPS quench on the open chain");
  auto* c6 = app.add_subcommand("bounds-table", "closed-form entropy and bond-dimension bounds");
  entropy_curve.add(*c1);
  verify_theorem.add(*c2);
  bessel_check.add(*c3);
  oracle_compare.add(*c4);
  tebd_run.add(*c5);
  bounds_table.add(*c6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (common.threads == 0) common.threads = std::max(1u, std::thread::hardware_concurrency());
    fs::create_directories(common.output_dir);
    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    if (sub == c1) result = entropy_curve.run(common);
    if (sub == c2) result = verify_theorem.run(common);
    if (sub == c3) result = bessel_check.run(common);
    if (sub == c4) result = oracle_compare.run(common);
    if (sub == c5) result = tebd_run.run(common);
    if (sub == c6) result = bounds_table.run(common);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(common, command, result, seconds);
    std::cout << command << ": " << result.summary.dump() << '\n';
    if (result.exit_code == kViolation) std::cerr << command << ": violation detected\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << command << ": invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << command << ": invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << command << ": error: " << e.what() << '\n';
    return kInvalidConfig;
  }
}
