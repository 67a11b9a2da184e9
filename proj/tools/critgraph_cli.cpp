// critgraph: command-line front end for the critical random graph toolkit.
//
//   critgraph sweep  --n 1000000 --p critical --trials 1 --seed 7
//   critgraph tail   --kind tail_c1 --n 10000 --A 2 --trials 10000
//   critgraph walk   --mode identity --n 1000 --H 10 --trials 1000000
//   critgraph bounds --thm easy --A 4
//   critgraph verify --quick
//   critgraph oracle --n 4 --p critical --trials 1000000
//
// Exit codes: 0 ok, 1 usage or runtime error, 2 a verification check failed.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "critgraph/bounds.hpp"
#include "critgraph/harness.hpp"
#include "critgraph/oracle.hpp"
#include "critgraph/results_io.hpp"

using namespace critgraph;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitCheckFailed = 2;

struct Common {
  std::uint64_t seed = 1;
  int threads = 0;
  std::string out;
  std::string format = "jsonl";
};

struct ModelArgs {
  std::int64_t n = 1000;
  std::string p = "critical";
  std::optional<double> lambda;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "master seed");
  app->add_option("--threads", c.threads, "worker threads (default: $CRITGRAPH_THREADS or all cores)");
  app->add_option("--out", c.out, "write machine-readable results to this path");
  app->add_option("--format", c.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "json", "csv"}));
}

void add_model(CLI::App* app, ModelArgs& m) {
  app->add_option("--n", m.n, "vertex count")->check(CLI::PositiveNumber);
  app->add_option("--p", m.p, "edge probability, or 'critical' for 1/n");
  app->add_option("--lambda", m.lambda, "window drift: p = 1/n + lambda n^(-4/3)");
}

GraphParams resolve(const ModelArgs& m) {
  if (m.lambda) return GraphParams::window(m.n, *m.lambda);
  if (m.p == "critical") return GraphParams::critical(m.n);
  std::size_t used = 0;
  double p = 0;
  try {
    p = std::stod(m.p, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != m.p.size()) throw ParameterError("--p expects a number or 'critical', got '" + m.p + "'");
  return GraphParams::with_p(m.n, p);
}

void apply_threads(const Common& c) {
  int t = c.threads;
  if (t <= 0) {
    if (const char* env = std::getenv("CRITGRAPH_THREADS")) t = std::atoi(env);
  }
  set_worker_threads(t);
}

ResultFormat out_format(const Common& c) { return parse_result_format(c.format); }

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

json manifest(const Common& c, const std::string& command, json config) {
  config["master_seed"] = c.seed;
  config["threads"] = worker_threads();
  return {{"command", command}, {"version", kVersion}, {"config", std::move(config)}};
}

json model_json(const GraphParams& g) {
  std::ostringstream p;
  p << std::setprecision(17) << g.p;
  return {{"n", g.n}, {"p", g.p}, {"p_text", p.str()}, {"lambda", g.lambda ? json(*g.lambda) : json(nullptr)}};
}

std::string cell_text(const json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return fmt(j.get<double>(), 10);
  return j.dump();
}

// Rows of cells written either as JSON lines (one object per row, keyed by
// header) or as CSV.
void write_table(const std::string& path, ResultFormat format, const json& header_manifest,
                 const std::vector<std::string>& columns, const std::vector<std::vector<json>>& rows) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  if (format == ResultFormat::json_lines) {
    for (const auto& row : rows) {
      json j = json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) j[columns[i]] = row[i];
      j["manifest"] = header_manifest;
      os << j.dump() << '\n';
    }
  } else {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::string cell = cell_text(row[i]);
        if (cell.find_first_of(",\"") != std::string::npos) {
          std::string q = "\"";
          for (char ch : cell) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          cell = q + "\"";
        }
        os << (i ? "," : "") << cell;
      }
      os << '\n';
    }
  }
  if (!os.flush()) throw std::runtime_error("write failed for '" + path + "'");
}

void print_report(const VerdictReport& r) {
  std::cout << to_string(r.spec.kind) << "  " << r.manifest.params << "  trials=" << r.spec.trials
            << "  seed=" << r.spec.master_seed << "  " << fmt(r.manifest.wall_seconds, 3) << "s\n";
  for (const auto& c : r.checks) {
    std::cout << "  " << std::left << std::setw(44) << c.name << std::right;
    if (c.estimate) {
      std::cout << " p_hat=" << fmt(c.estimate->p_hat) << " ci_low=" << fmt(c.estimate->ci_low);
    }
    if (c.bound) std::cout << " bound=" << fmt(c.bound->value) << " [" << c.bound->name << "]";
    if (c.statistic) std::cout << " stat=" << fmt(*c.statistic);
    if (c.limit) std::cout << " limit=" << fmt(*c.limit);
    std::cout << "  " << (c.pass ? "ok" : "FAIL") << (c.advisory ? " (advisory)" : "");
    if (!c.note.empty()) std::cout << "  " << c.note;
    std::cout << '\n';
  }
}

void maybe_write_reports(const Common& c, const std::vector<VerdictReport>& reports) {
  if (!c.out.empty()) write_results(reports, c.out, out_format(c));
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
  Common common;
  ModelArgs model;
  std::uint64_t trials = 1;
  bool streaming = false;
};

int run_sweep(const SweepArgs& a) {
  apply_threads(a.common);
  const GraphParams g = resolve(a.model);
  // Full size lists above 1e7 vertices are large; stream instead.
  const bool streaming = a.streaming || g.n > 10'000'000;
  std::cout << "sweep  " << g.describe() << "  trials=" << a.trials << "  seed=" << a.common.seed << '\n';
  std::cout << std::setw(8) << "trial" << std::setw(14) << "|C1|" << std::setw(14) << "|C2|" << std::setw(14)
            << "components" << std::setw(14) << "vertices" << '\n';
  std::vector<std::vector<json>> rows;
  std::map<int, std::uint64_t> log_hist;  // floor(log2 size) -> count
  for (std::uint64_t t = 0; t < a.trials; ++t) {
    RngStream rng(a.common.seed, t);
    std::int64_t c1 = 0, c2 = 0, count = 0, total = 0;
    if (streaming) {
      const SweepSummary s = sweep_streaming(g, rng);
      c1 = s.largest;
      c2 = s.second_largest;
      count = s.count;
      total = s.steps;
    } else {
      const SweepResult s = sweep_components(g, rng);
      c1 = s.largest;
      c2 = s.second_largest;
      count = static_cast<std::int64_t>(s.sizes.size());
      for (const std::int64_t x : s.sizes) {
        total += x;
        ++log_hist[std::bit_width(static_cast<std::uint64_t>(x)) - 1];
      }
    }
    std::cout << std::setw(8) << t << std::setw(14) << c1 << std::setw(14) << c2 << std::setw(14) << count
              << std::setw(14) << total << '\n';
    rows.push_back({t, c1, c2, count, total});
  }
  if (!log_hist.empty()) {
    std::cout << "size histogram (all trials)\n";
    for (const auto& [k, cnt] : log_hist) {
      std::cout << "  [" << (std::int64_t{1} << k) << ", " << (std::int64_t{1} << (k + 1)) << ")  " << cnt << '\n';
    }
  }
  if (!a.common.out.empty()) {
    json cfg = model_json(g);
    cfg["trials"] = a.trials;
    cfg["streaming"] = streaming;
    write_table(a.common.out, out_format(a.common), manifest(a.common, "sweep", cfg),
                {"trial", "largest", "second_largest", "components", "vertices"}, rows);
  }
  return 0;
}

// ---- tail ----------------------------------------------------------------

struct TailArgs {
  Common common;
  ModelArgs model;
  std::string kind = "tail_c1";
  std::vector<double> scales;
  std::uint64_t trials = 10'000;
  double alpha = 0.01;
  double budget = 1e11;
};

int run_tail(const TailArgs& a) {
  apply_threads(a.common);
  std::vector<VerdictReport> reports;
  for (std::size_t i = 0; i < a.scales.size(); ++i) {
    ExperimentSpec s;
    s.kind = parse_experiment_kind(a.kind);
    s.params = resolve(a.model);
    s.scale = a.scales[i];
    s.trials = a.trials;
    s.master_seed = a.common.seed;
    s.alpha = a.alpha;
    s.step_budget = a.budget;
    s.threads = a.common.threads;
    reports.push_back(run_experiment(s));
    print_report(reports.back());
  }
  maybe_write_reports(a.common, reports);
  return 0;
}

// ---- walk ----------------------------------------------------------------

struct WalkArgs {
  Common common;
  ModelArgs model;
  std::string mode = "identity";
  std::string identity = "mean_S_gamma";
  std::int64_t barrier = 0;
  double delta = 0.01;
  std::uint64_t trials = 100'000;
  double alpha = 0.01;
};

int run_walk_cmd(const WalkArgs& a) {
  apply_threads(a.common);
  ExperimentSpec s;
  s.params = resolve(a.model);
  s.trials = a.trials;
  s.master_seed = a.common.seed;
  s.alpha = a.alpha;
  s.barrier = a.barrier;
  s.threads = a.common.threads;
  if (a.mode == "identity") {
    s.kind = ExperimentKind::walk_identity;
    s.identity = parse_identity_kind(a.identity);
  } else if (a.mode == "overshoot") {
    s.kind = ExperimentKind::overshoot_dominance;
  } else {
    s.kind = ExperimentKind::two_stage;
    s.scale = a.delta;
    const StageParams st = stage_params(a.delta, s.params.n);
    std::cout << "stage parameters: h=" << st.h << " T1=" << st.t1 << " T2=" << st.t2
              << (st.side_conditions_hold() ? "" : "  (side conditions fail)") << '\n';
  }
  const VerdictReport r = run_experiment(s);
  print_report(r);
  maybe_write_reports(a.common, {r});
  return 0;
}

// ---- bounds --------------------------------------------------------------

struct BoundsArgs {
  Common common;
  std::string thm = "easy";
  std::vector<double> A{4.0};
  std::vector<double> delta{0.01};
  std::vector<double> lambda{1.0};
  std::int64_t n = 1'000'000;
};

int run_bounds(const BoundsArgs& a) {
  const std::vector<std::string> columns{"bound", "A", "delta", "lambda", "n", "raw_value", "value", "valid",
                                         "conditions"};
  std::vector<std::vector<json>> rows;
  auto add = [&](const BoundReport& r, json A, json d, json l) {
    rows.push_back({r.name, A, d, l, a.n, r.raw_value, r.value, r.valid, format_conditions(r)});
  };
  const json none = nullptr;
  if (a.thm == "easy") {
    for (double A : a.A) add(easy_bound_c1(A), A, none, none);
  } else if (a.thm == "easy-cv") {
    for (double A : a.A) add(easy_bound_cv(std::max<std::int64_t>(1, floor_coef_n23(A, a.n)), a.n), A, none, none);
  } else if (a.thm == "exp-tail") {
    for (double A : a.A) {
      const BoundPair b = exp_tail_bounds(A, a.n);
      add(b.per_vertex, A, none, none);
      add(b.largest, A, none, none);
    }
  } else if (a.thm == "lower-tail") {
    for (double d : a.delta) add(lower_tail_bound(d, a.n), none, d, none);
  } else if (a.thm == "window") {
    for (double l : a.lambda)
      for (double A : a.A) {
        const BoundPair b = window_tail_bounds(A, l, a.n);
        add(b.per_vertex, A, none, l);
        add(b.largest, A, none, l);
      }
  } else {  // min
    for (double A : a.A) {
      add(cv_upper_bound(A, a.n), A, none, none);
      add(c1_upper_bound(A, a.n), A, none, none);
    }
  }
  // The grid itself is CSV on stdout, ready for plotting.
  std::cout << "bound,A,delta,lambda,n,raw_value,value,valid\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) std::cout << (i ? "," : "") << cell_text(r[i]);
    std::cout << '\n';
  }
  if (!a.common.out.empty()) {
    write_table(a.common.out, out_format(a.common),
                manifest(a.common, "bounds", {{"thm", a.thm}, {"n", a.n}}), columns, rows);
  }
  return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  Common common;
  bool quick = false;
};

int run_verify(const VerifyArgs& a) {
  apply_threads(a.common);
  const auto suite = default_suite(a.quick, a.common.seed);
  std::vector<VerdictReport> reports;
  std::size_t failed = 0;
  for (const auto& s : suite) {
    reports.push_back(run_experiment(s));
    print_report(reports.back());
    failed += reports.back().pass ? 0 : 1;
  }
  maybe_write_reports(a.common, reports);
  std::cout << (failed == 0 ? "verify: all " + std::to_string(suite.size()) + " experiments passed\n"
                            : "verify: " + std::to_string(failed) + " of " + std::to_string(suite.size()) +
                                  " experiments FAILED\n");
  return failed == 0 ? 0 : kExitCheckFailed;
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
  Common common;
  ModelArgs model;
  std::uint64_t trials = 0;
  double tolerance = 0.005;
};

int run_oracle_cmd(const OracleArgs& a) {
  apply_threads(a.common);
  const GraphParams g = resolve(a.model);
  const bool rational = !g.lambda && a.model.p == "critical";
  const EdgeProbability ep = rational ? EdgeProbability::exact(1, g.n) : EdgeProbability::real(g.p);
  const ExactOracle o = enumerate_exact(g.n, ep);
  std::cout << "exact distributions  " << g.describe() << (rational ? "  (rational)" : "") << '\n';
  std::cout << std::setw(6) << "size" << std::setw(24) << "P(|C(v)|=s)" << std::setw(24) << "P(|C1|=s)" << '\n';
  std::vector<std::vector<json>> rows;
  for (std::size_t i = 0; i < o.cv.support.size(); ++i) {
    const std::int64_t s = o.cv.support[i];
    const std::string cv = rational ? o.cv.exact[i].str() : fmt(static_cast<double>(o.cv.probs[i]), 15);
    const std::string c1 = rational ? o.c1.exact[i].str() : fmt(static_cast<double>(o.c1.probs[i]), 15);
    std::cout << std::setw(6) << s << std::setw(24) << cv << std::setw(24) << c1 << '\n';
    rows.push_back({s, cv, c1, static_cast<double>(o.cv.probs[i]), static_cast<double>(o.c1.probs[i])});
  }
  std::vector<VerdictReport> reports;
  if (a.trials > 0) {
    ExperimentSpec s;
    s.kind = ExperimentKind::oracle_equivalence;
    s.params = g;
    s.trials = a.trials;
    s.master_seed = a.common.seed;
    s.tv_tolerance = a.tolerance;
    s.threads = a.common.threads;
    reports.push_back(run_experiment(s));
    print_report(reports.back());
  }
  if (!a.common.out.empty()) {
    if (!reports.empty()) {
      write_results(reports, a.common.out, out_format(a.common));
    } else {
      write_table(a.common.out, out_format(a.common), manifest(a.common, "oracle", model_json(g)),
                  {"size", "cv", "c1", "cv_float", "c1_float"}, rows);
    }
  }
  return reports.empty() || reports.front().pass ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical random graph simulation and bound verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "full component sweeps: |C1|, |C2|, size histogram");
  add_common(sweep_cmd, sweep.common);
  add_model(sweep_cmd, sweep.model);
  sweep_cmd->add_option("--trials", sweep.trials)->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--streaming", sweep.streaming, "constant-memory sweep (no histogram)");

  TailArgs tail;
  auto* tail_cmd = app.add_subcommand("tail", "tail_c1 / tail_cv / lower_c1 experiments with bound verdicts");
  add_common(tail_cmd, tail.common);
  add_model(tail_cmd, tail.model);
  tail_cmd->add_option("--kind", tail.kind)->check(CLI::IsMember({"tail_c1", "tail_cv", "lower_c1"}));
  auto* a_opt = tail_cmd->add_option("--A", tail.scales, "threshold multiplier(s) A")->delimiter(',');
  tail_cmd->add_option("--delta", tail.scales, "lower_c1 delta(s)")->delimiter(',')->excludes(a_opt);
  tail_cmd->add_option("--trials", tail.trials)->check(CLI::PositiveNumber);
  tail_cmd->add_option("--alpha", tail.alpha)->check(CLI::Range(0.0, 1.0));
  tail_cmd->add_option("--budget", tail.budget, "step budget");

  WalkArgs walk;
  auto* walk_cmd = app.add_subcommand("walk", "walk identities, overshoot dominance, two-stage diagnostics");
  add_common(walk_cmd, walk.common);
  add_model(walk_cmd, walk.model);
  walk_cmd->add_option("--mode", walk.mode)->check(CLI::IsMember({"identity", "overshoot", "two-stage"}));
  walk_cmd->add_option("--identity", walk.identity)
      ->check(CLI::IsMember({"mean_S_gamma", "quadratic", "drift_linear"}));
  walk_cmd->add_option("--H", walk.barrier, "barrier (default 10, or ceil(n^(1/3)) with --lambda)");
  walk_cmd->add_option("--delta", walk.delta, "two-stage delta");
  walk_cmd->add_option("--trials", walk.trials)->check(CLI::PositiveNumber);
  walk_cmd->add_option("--alpha", walk.alpha)->check(CLI::Range(0.0, 1.0));

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate closed-form bounds over a grid (CSV)");
  add_common(bounds_cmd, bounds.common);
  bounds_cmd->add_option("--thm", bounds.thm)
      ->check(CLI::IsMember({"easy", "easy-cv", "exp-tail", "lower-tail", "window", "min"}));
  bounds_cmd->add_option("--A", bounds.A)->delimiter(',');
  bounds_cmd->add_option("--delta", bounds.delta)->delimiter(',');
  bounds_cmd->add_option("--lambda", bounds.lambda)->delimiter(',');
  bounds_cmd->add_option("--n", bounds.n)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the default verification suite");
  add_common(verify_cmd, verify.common);
  verify_cmd->add_flag("--quick", verify.quick, "reduced suite: n <= 1e4");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact enumeration for n <= 7, optional Monte Carlo cross-check");
  add_common(oracle_cmd, oracle.common);
  add_model(oracle_cmd, oracle.model);
  oracle_cmd->add_option("--trials", oracle.trials, "Monte Carlo runs to compare (0 = none)");
  oracle_cmd->add_option("--tolerance", oracle.tolerance, "TV tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFailure;
  }

  try {
    if (*sweep_cmd) return run_sweep(sweep);
    if (*tail_cmd) {
      if (tail.scales.empty()) throw ParameterError("tail needs --A (or --delta for lower_c1)");
      return run_tail(tail);
    }
    if (*walk_cmd) return run_walk_cmd(walk);
    if (*bounds_cmd) return run_bounds(bounds);
    if (*verify_cmd) return run_verify(verify);
    if (*oracle_cmd) return run_oracle_cmd(oracle);
  } catch (const std::exception& e) {
    std::cerr << "critgraph: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
