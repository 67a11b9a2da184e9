#include "critgraph/harness.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <chrono>
#include <cmath>
#include <sstream>

#include "critgraph/distributions.hpp"
#include "critgraph/explore.hpp"
#include "critgraph/oracle.hpp"

namespace critgraph {

namespace {

constexpr std::pair<ExperimentKind, const char*> kKindNames[] = {
    {ExperimentKind::tail_c1, "tail_c1"},
    {ExperimentKind::tail_cv, "tail_cv"},
    {ExperimentKind::lower_c1, "lower_c1"},
    {ExperimentKind::walk_identity, "walk_identity"},
    {ExperimentKind::overshoot_dominance, "overshoot_dominance"},
    {ExperimentKind::two_stage, "two_stage"},
    {ExperimentKind::oracle_equivalence, "oracle_equivalence"},
};

constexpr std::pair<IdentityKind, const char*> kIdentityNames[] = {
    {IdentityKind::mean_s_gamma, "mean_S_gamma"},
    {IdentityKind::quadratic, "quadratic"},
    {IdentityKind::drift_linear, "drift_linear"},
};

constexpr double kIdentityZLimit = 4.0;
constexpr double kWalkSlackSe = 3.0;
constexpr std::int64_t kDefaultCriticalBarrier = 10;

bool is_window(const GraphParams& g) { return g.lambda && *g.lambda != 0.0; }

bool is_critical(const GraphParams& g) {
  return !is_window(g) && g.p == 1.0 / static_cast<double>(g.n);
}

double normal_quantile_upper(double alpha) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), 1.0 - alpha);
}

std::int64_t walk_barrier(const ExperimentSpec& spec) {
  if (spec.barrier > 0) return spec.barrier;
  return is_window(spec.params) ? window_barrier(spec.params.n) : kDefaultCriticalBarrier;
}

WalkParams walk_params(const ExperimentSpec& spec) {
  WalkParams w;
  w.n = spec.params.n;
  w.p = spec.params.p;
  w.barrier = walk_barrier(spec);
  w.validate();
  return w;
}

// p_hat - k SE <= bound, the form used for the proof-internal inequalities.
CheckResult se_check(std::string name, double estimate, double se, double bound, bool advisory,
                     std::string note) {
  CheckResult c;
  c.name = std::move(name);
  c.statistic = estimate;
  c.limit = bound + kWalkSlackSe * se;
  c.pass = estimate <= *c.limit;
  c.advisory = advisory;
  c.note = std::move(note);
  return c;
}

CheckResult wilson_check(std::string name, const TailEstimate& est, std::optional<BoundReport> bound) {
  CheckResult c;
  c.name = std::move(name);
  c.estimate = est;
  if (bound && bound->valid) {
    c.bound = bound;
    c.pass = est.ci_low <= bound->value;
  } else {
    c.bound = bound;
    c.pass = true;
    c.advisory = true;
    c.note = "no applicable bound; reported only";
  }
  return c;
}

std::vector<double> histogram(const std::vector<std::int64_t>& sizes, std::int64_t n) {
  std::vector<double> h(static_cast<std::size_t>(n + 1), 0.0);
  for (const std::int64_t s : sizes) h[static_cast<std::size_t>(s)] += 1.0;
  for (double& x : h) x /= static_cast<double>(sizes.size());
  return h;
}

void finalize(VerdictReport& report) {
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckResult& c) { return c.pass || c.advisory; });
  if (!report.checks.empty()) {
    report.estimate = report.checks.front().estimate;
    report.bound = report.checks.front().bound;
  }
}

void run_tail(const ExperimentSpec& spec, Execution exec, VerdictReport& report) {
  const GraphParams& g = spec.params;
  const std::int64_t threshold = event_threshold(spec);
  const bool window = is_window(g);
  // Window events are {size >= K}; critical events are {size > T}.
  const std::int64_t reach = window ? threshold : threshold + 1;

  std::uint64_t hits = 0;
  if (spec.kind == ExperimentKind::tail_c1) {
    hits = count_component_at_least(g, reach, spec.trials, spec.master_seed, exec);
  } else {
    hits = count_trials(spec.trials, exec, [&](std::uint64_t i) {
      RngStream rng(spec.master_seed, i);
      return explore_component(g, rng).size >= reach;
    });
  }
  const TailEstimate est = wilson_estimate(hits, spec.trials, spec.alpha);

  std::optional<BoundReport> bound;
  const bool c1 = spec.kind == ExperimentKind::tail_c1;
  if (window) {
    const BoundPair b = window_tail_bounds(spec.scale, *g.lambda, g.n);
    bound = c1 ? b.largest : b.per_vertex;
  } else if (is_critical(g)) {
    bound = c1 ? c1_upper_bound(spec.scale, g.n) : cv_upper_bound(spec.scale, g.n);
  }
  std::ostringstream name;
  name << (c1 ? "P(|C1| " : "P(|C(v)| ") << (window ? ">= " : "> ") << threshold << ")";
  report.checks.push_back(wilson_check(name.str(), est, bound));
  if (window && !report.checks.back().advisory && g.n < 100'000) {
    report.checks.back().advisory = true;
    report.checks.back().note = "n below 1e5: window bounds hold only for large enough n";
  }
}

void run_lower(const ExperimentSpec& spec, Execution exec, VerdictReport& report) {
  const GraphParams& g = spec.params;
  const std::int64_t t2 = event_threshold(spec);
  const std::uint64_t reached = count_component_at_least(g, t2, spec.trials, spec.master_seed, exec);
  const TailEstimate est = wilson_estimate(spec.trials - reached, spec.trials, spec.alpha);
  std::optional<BoundReport> bound;
  if (is_critical(g)) bound = lower_tail_bound(spec.scale, g.n);
  report.checks.push_back(wilson_check("P(|C1| < " + std::to_string(t2) + ")", est, bound));
}

void run_walk_identity(const ExperimentSpec& spec, Execution exec, VerdictReport& report) {
  const WalkParams w = walk_params(spec);
  const IdentityReport id = martingale_identity_check(spec.identity, w, spec.trials, spec.master_seed, exec);
  CheckResult c;
  c.name = "identity " + to_string(spec.identity);
  c.statistic = id.z;
  c.limit = kIdentityZLimit;
  c.pass = id.pass;
  std::ostringstream note;
  note.precision(8);
  note << "mean=" << id.estimate.mean << " se=" << id.estimate.std_error << " target=" << id.target;
  c.note = note.str();
  report.checks.push_back(c);

  // Walk inequalities from the same seeds (streams are replayed, not reused
  // across different events, so every estimate is a plain i.i.d. mean).
  const auto outcomes = map_trials<WalkOutcome>(0, spec.trials, exec, [&](std::uint64_t i) {
    RngStream rng(spec.master_seed, i);
    return run_walk(w, rng);
  });
  std::vector<double> hit(outcomes.size()), gamma(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    hit[i] = outcomes[i].hit_top ? 1.0 : 0.0;
    gamma[i] = static_cast<double>(outcomes[i].gamma);
  }
  const MeanEstimate hit_est = mean_estimate(hit);
  const MeanEstimate gamma_est = mean_estimate(gamma);

  if (is_critical(spec.params)) {
    report.checks.push_back(se_check("P(S_gamma >= H) <= 1/H", hit_est.mean, hit_est.std_error,
                                     walk_hit_bound(w.barrier).value, false, ""));
    const bool in_range = w.barrier >= 2 && w.barrier <= spec.params.n - 3;
    report.checks.push_back(se_check("E[gamma] <= H+3", gamma_est.mean, gamma_est.std_error,
                                     walk_mean_gamma_bound(w.barrier), !in_range,
                                     in_range ? "" : "needs 2 <= H <= n-3"));
    const auto capped = count_trials(spec.trials, exec, [&](std::uint64_t i) {
      RngStream rng(spec.master_seed, spec.trials + i);
      return run_walk_capped(w, rng).positive_at_stop();
    });
    const double ph = static_cast<double>(capped) / static_cast<double>(spec.trials);
    report.checks.push_back(se_check("P(S_gamma* > 0) <= 3/H", ph,
                                     std::sqrt(ph * (1 - ph) / static_cast<double>(spec.trials)),
                                     walk_capped_positive_bound(w.barrier).value, !in_range, ""));
  } else if (is_window(spec.params)) {
    const double lambda = *spec.params.lambda;
    const bool advisory = spec.params.n < 100'000 || w.barrier != window_barrier(spec.params.n);
    const std::string note = advisory ? "advisory: small n or non-default barrier" : "";
    if (lambda > 0) {
      report.checks.push_back(se_check("P(S_gamma >= H) <= 4 lambda n^-1/3 / (1-e^-4lambda)",
                                       hit_est.mean, hit_est.std_error,
                                       drift_walk_hit_bound(lambda, spec.params.n).raw_value,
                                       advisory, note));
    }
    report.checks.push_back(se_check(lambda > 0 ? "E[gamma] <= 16 n^1/3" : "E[gamma] <= min(5,-1/lambda) n^1/3",
                                     gamma_est.mean, gamma_est.std_error,
                                     drift_walk_mean_gamma_bound(lambda, spec.params.n), advisory, note));
  }
}

void run_dominance(const ExperimentSpec& spec, Execution exec, VerdictReport& report) {
  const WalkParams w = walk_params(spec);
  const OvershootSample sample = collect_overshoots(w, spec.trials, spec.master_seed, exec);
  const DominanceVerdict v = dominance_verdict(sample.values, w.n, w.p, spec.alpha);
  CheckResult c;
  c.name = "overshoot dominated by Bin(n,p)";
  c.estimate = wilson_estimate(sample.values.size(), spec.trials, spec.alpha);
  c.statistic = v.max_violation;
  c.limit = v.epsilon;
  c.pass = v.pass;
  c.advisory = v.indeterminate;
  c.note = v.indeterminate ? "empty sample: indeterminate"
                           : "samples=" + std::to_string(v.sample_size);
  report.checks.push_back(c);
}

void run_two_stage_kind(const ExperimentSpec& spec, Execution exec, VerdictReport& report) {
  const GraphParams& g = spec.params;
  const StageParams stage = stage_params(spec.scale, g.n);
  const auto outcomes = map_trials<TwoStageOutcome>(0, spec.trials, exec, [&](std::uint64_t i) {
    RngStream rng(spec.master_seed, i);
    return run_two_stage(g, stage, rng);
  });
  std::uint64_t fail1 = 0, below = 0;
  for (const auto& o : outcomes) {
    fail1 += o.reached_h ? 0 : 1;
    below += o.survived ? 0 : 1;
  }
  const BoundPair b = two_stage_bounds(stage.h, stage.t2, g.n);
  const bool critical = is_critical(g);
  report.checks.push_back(wilson_check("P(tau_0 < T2)", wilson_estimate(below, spec.trials, spec.alpha),
                                       critical ? std::optional(b.largest) : std::nullopt));
  report.checks.push_back(wilson_check("P(tau_h = T1, h not reached)",
                                       wilson_estimate(fail1, spec.trials, spec.alpha),
                                       critical ? std::optional(b.per_vertex) : std::nullopt));
  std::ostringstream note;
  note << "h=" << stage.h << " T1=" << stage.t1 << " T2=" << stage.t2;
  report.checks.front().note = note.str();
}

void run_oracle(const ExperimentSpec& spec, Execution exec, VerdictReport& report) {
  const GraphParams& g = spec.params;
  const EdgeProbability p = (!g.lambda && g.p == 1.0 / static_cast<double>(g.n))
                                ? EdgeProbability::exact(1, g.n)
                                : EdgeProbability::real(g.p);
  const ExactOracle exact = enumerate_exact(g.n, p);
  const auto cv = map_trials<std::int64_t>(0, spec.trials, exec, [&](std::uint64_t i) {
    RngStream rng(spec.master_seed, i);
    return explore_component(g, rng).size;
  });
  const auto c1 = map_trials<std::int64_t>(spec.trials, spec.trials, exec, [&](std::uint64_t i) {
    RngStream rng(spec.master_seed, i);
    return sweep_streaming(g, rng).largest;
  });
  for (const auto& [label, sample, dist] :
       {std::tuple{"TV |C(v)|", &cv, &exact.cv}, std::tuple{"TV |C1|", &c1, &exact.c1}}) {
    CheckResult c;
    c.name = label;
    c.statistic = total_variation(histogram(*sample, g.n), dist->by_size());
    c.limit = spec.tv_tolerance;
    c.pass = *c.statistic <= spec.tv_tolerance;
    report.checks.push_back(c);
  }
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  throw ParameterError("unknown experiment kind '" + name + "'");
}

std::string to_string(IdentityKind kind) {
  for (const auto& [k, name] : kIdentityNames)
    if (k == kind) return name;
  return "unknown";
}

IdentityKind parse_identity_kind(const std::string& name) {
  for (const auto& [k, n] : kIdentityNames)
    if (name == n) return k;
  throw ParameterError("unknown identity kind '" + name + "'");
}

void ExperimentSpec::validate() const {
  params.validate();
  if (trials < 1) throw ParameterError("experiment needs at least one trial");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0,1)");
  switch (kind) {
    case ExperimentKind::tail_c1:
    case ExperimentKind::tail_cv:
      if (!(scale > 0.0)) throw ParameterError("tail experiments need A > 0");
      break;
    case ExperimentKind::lower_c1:
      if (!(scale > 0.0)) throw ParameterError("lower_c1 needs delta > 0");
      break;
    case ExperimentKind::two_stage:
      stage_params(scale, params.n);  // throws on invalid (delta, n)
      break;
    case ExperimentKind::walk_identity:
      if (identity == IdentityKind::quadratic && !is_critical(params)) {
        throw ParameterError("quadratic identity requires p = 1/n");
      }
      break;
    case ExperimentKind::oracle_equivalence:
      if (params.n > kMaxEnumerationVertices) throw ParameterError("oracle equivalence needs n <= 7");
      break;
    case ExperimentKind::overshoot_dominance:
      break;
  }
  if (barrier < 0) throw ParameterError("barrier must be nonnegative");
}

std::int64_t event_threshold(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case ExperimentKind::tail_c1:
    case ExperimentKind::tail_cv:
      return is_window(spec.params) ? ceil_coef_n23(spec.scale, spec.params.n)
                                    : floor_coef_n23(spec.scale, spec.params.n);
    case ExperimentKind::lower_c1:
      return floor_coef_n23(spec.scale, spec.params.n);
    default:
      return 0;
  }
}

double estimate_work(const ExperimentSpec& spec) {
  const auto trials = static_cast<double>(spec.trials);
  const auto n = static_cast<double>(spec.params.n);
  const double mean_degree = n * spec.params.p;
  switch (spec.kind) {
    case ExperimentKind::tail_c1:
    case ExperimentKind::lower_c1:
      return trials * n;
    case ExperimentKind::tail_cv: {
      const bool near_critical = mean_degree <= 1.0 + 10.0 * std::cbrt(1.0 / n);
      return trials * (near_critical ? std::min(n, 4.0 * std::cbrt(n) + 16.0) : n);
    }
    case ExperimentKind::walk_identity:
    case ExperimentKind::overshoot_dominance: {
      const auto h = static_cast<double>(walk_barrier(spec));
      return 3.0 * trials * std::min(h * h, 16.0 * h + 16.0);
    }
    case ExperimentKind::two_stage: {
      const StageParams s = stage_params(spec.scale, spec.params.n);
      return trials * static_cast<double>(s.t1 + s.t2);
    }
    case ExperimentKind::oracle_equivalence:
      return std::ldexp(1.0, static_cast<int>(n * (n - 1) / 2)) + 2.0 * trials * n;
  }
  return 0.0;
}

TailEstimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double alpha) {
  if (trials == 0) throw ParameterError("Wilson interval needs trials >= 1");
  if (successes > trials) throw ParameterError("successes exceed trials");
  TailEstimate e;
  e.successes = successes;
  e.trials = trials;
  const auto m = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / m;
  e.p_hat = ph;
  const double z = normal_quantile_upper(alpha);
  const double z2 = z * z;
  const double denom = 1.0 + z2 / m;
  const double center = (ph + z2 / (2.0 * m)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / m + z2 / (4.0 * m * m)) / denom;
  e.ci_low = successes == 0 ? 0.0 : std::clamp(center - half, 0.0, ph);
  e.ci_high = successes == trials ? 1.0 : std::clamp(center + half, ph, 1.0);
  return e;
}

MeanEstimate mean_estimate(const std::vector<double>& values) {
  MeanEstimate e;
  e.count = values.size();
  if (values.empty()) return e;
  double mean = 0.0, m2 = 0.0;
  std::uint64_t k = 0;
  for (const double x : values) {
    ++k;
    const double d = x - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (x - mean);
  }
  e.mean = mean;
  if (k > 1) {
    e.std_error = std::sqrt(m2 / static_cast<double>(k - 1) / static_cast<double>(k));
  }
  return e;
}

std::vector<std::int64_t> collect_largest(const GraphParams& params, std::uint64_t trials,
                                          std::uint64_t master_seed, Execution exec) {
  params.validate();
  return map_trials<std::int64_t>(0, trials, exec, [&](std::uint64_t i) {
    RngStream rng(master_seed, i);
    return sweep_streaming(params, rng).largest;
  });
}

std::uint64_t count_component_at_least(const GraphParams& params, std::int64_t size,
                                       std::uint64_t trials, std::uint64_t master_seed,
                                       Execution exec) {
  params.validate();
  if (size <= 1) return trials;  // every graph has a component of size >= 1
  return count_trials(trials, exec, [&](std::uint64_t i) {
    RngStream rng(master_seed, i);
    return sweep_streaming(params, rng, size).reached;
  });
}

std::vector<double> binomial_cdf(std::int64_t n, double p, std::int64_t kmax) {
  if (n < 0 || kmax < 0) throw ParameterError("binomial CDF needs n, kmax >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("probability must lie in [0,1]");
  std::vector<double> cdf(static_cast<std::size_t>(kmax + 1), 1.0);
  if (p == 0.0) return cdf;
  if (p == 1.0) {
    for (std::int64_t k = 0; k <= kmax; ++k) cdf[static_cast<std::size_t>(k)] = k >= n ? 1.0 : 0.0;
    return cdf;
  }
  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(-static_cast<long double>(p));
  long double acc = 0.0L;
  for (std::int64_t k = 0; k <= kmax && k <= n; ++k) {
    const long double lpmf = std::lgamma(static_cast<long double>(n) + 1) -
                             std::lgamma(static_cast<long double>(k) + 1) -
                             std::lgamma(static_cast<long double>(n - k) + 1) + k * lp + (n - k) * lq;
    acc += std::exp(lpmf);
    cdf[static_cast<std::size_t>(k)] = static_cast<double>(std::min(acc, 1.0L));
  }
  return cdf;
}

DominanceVerdict dominance_verdict(const std::vector<std::int64_t>& sample, std::int64_t n,
                                   double p, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0,1)");
  DominanceVerdict v;
  v.sample_size = sample.size();
  if (sample.empty()) {
    v.indeterminate = true;
    return v;
  }
  const auto m = static_cast<double>(sample.size());
  v.epsilon = std::sqrt(std::log(2.0 / alpha) / (2.0 * m));
  const std::int64_t kmax = *std::max_element(sample.begin(), sample.end());
  if (*std::min_element(sample.begin(), sample.end()) < 0) {
    throw ParameterError("overshoot sample contains a negative value");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(kmax + 1), 0);
  for (const std::int64_t x : sample) ++counts[static_cast<std::size_t>(x)];
  const std::vector<double> ref = binomial_cdf(n, p, kmax);
  std::uint64_t running = 0;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    running += counts[static_cast<std::size_t>(k)];
    const double emp = static_cast<double>(running) / m;
    v.max_violation = std::max(v.max_violation, ref[static_cast<std::size_t>(k)] - emp);
  }
  v.pass = v.max_violation <= v.epsilon;
  return v;
}

IdentityReport martingale_identity_check(IdentityKind kind, const WalkParams& params,
                                         std::uint64_t trials, std::uint64_t master_seed,
                                         Execution exec) {
  params.validate();
  if (trials < 2) throw ParameterError("identity check needs at least two trials");
  const auto n = static_cast<double>(params.n);
  if (kind == IdentityKind::quadratic && params.p != 1.0 / n) {
    throw ParameterError("quadratic identity requires p = 1/n");
  }
  const double drift = n * params.p - 1.0;
  const double variance_rate = 1.0 - 1.0 / n;
  const auto values = map_trials<double>(0, trials, exec, [&](std::uint64_t i) {
    RngStream rng(master_seed, i);
    const WalkOutcome w = run_walk(params, rng);
    const auto s = static_cast<double>(w.s_final);
    const auto g = static_cast<double>(w.gamma);
    switch (kind) {
      case IdentityKind::mean_s_gamma: return s;
      case IdentityKind::quadratic: return s * s - variance_rate * g;
      case IdentityKind::drift_linear: return s - drift * g;
    }
    return s;
  });
  IdentityReport r;
  r.kind = kind;
  r.estimate = mean_estimate(values);
  r.target = 1.0;
  r.z = r.estimate.std_error > 0 ? (r.estimate.mean - r.target) / r.estimate.std_error
                                 : (r.estimate.mean == r.target ? 0.0 : INFINITY);
  r.pass = std::fabs(r.z) <= kIdentityZLimit;
  return r;
}

VerdictReport run_experiment(const ExperimentSpec& spec, Execution exec) {
  spec.validate();
  const double work = estimate_work(spec);
  if (work > spec.step_budget) {
    std::ostringstream os;
    os << "experiment " << to_string(spec.kind) << " estimated at " << work
       << " steps exceeds the budget of " << spec.step_budget;
    throw ResourceError(os.str());
  }
  if (spec.threads > 0) set_worker_threads(spec.threads);
  const auto start = std::chrono::steady_clock::now();

  VerdictReport report;
  report.spec = spec;
  switch (spec.kind) {
    case ExperimentKind::tail_c1:
    case ExperimentKind::tail_cv: run_tail(spec, exec, report); break;
    case ExperimentKind::lower_c1: run_lower(spec, exec, report); break;
    case ExperimentKind::walk_identity: run_walk_identity(spec, exec, report); break;
    case ExperimentKind::overshoot_dominance: run_dominance(spec, exec, report); break;
    case ExperimentKind::two_stage: run_two_stage_kind(spec, exec, report); break;
    case ExperimentKind::oracle_equivalence: run_oracle(spec, exec, report); break;
  }
  finalize(report);

  report.manifest.master_seed = spec.master_seed;
  report.manifest.params = spec.params.describe();
  report.manifest.threads = exec == Execution::serial ? 1 : worker_threads();
  report.manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ExperimentSpec> default_suite(bool quick, std::uint64_t master_seed) {
  std::vector<ExperimentSpec> suite;
  auto add = [&](ExperimentKind kind, GraphParams g, double scale, std::uint64_t trials,
                 std::int64_t barrier = 0, IdentityKind id = IdentityKind::mean_s_gamma) {
    ExperimentSpec s;
    s.kind = kind;
    s.params = g;
    s.scale = scale;
    s.trials = trials;
    s.master_seed = master_seed + suite.size();
    s.barrier = barrier;
    s.identity = id;
    suite.push_back(s);
  };
  using K = ExperimentKind;
  const std::int64_t big = quick ? 10'000 : 100'000;
  const std::uint64_t sweeps = quick ? 2'000 : 10'000;

  add(K::oracle_equivalence, GraphParams::critical(3), 0, quick ? 200'000 : 1'000'000);
  add(K::oracle_equivalence, GraphParams::with_p(5, 0.3), 0, quick ? 200'000 : 1'000'000);
  for (const double A : {2.0, 4.0, 9.0}) add(K::tail_c1, GraphParams::critical(big), A, sweeps);
  add(K::tail_cv, GraphParams::critical(big), 9.0, quick ? 100'000 : 100'000);
  for (const double d : {0.001, 0.01}) add(K::lower_c1, GraphParams::critical(big), d, sweeps);
  add(K::walk_identity, GraphParams::critical(1000), 0, quick ? 100'000 : 1'000'000, 10,
      IdentityKind::mean_s_gamma);
  add(K::walk_identity, GraphParams::critical(1000), 0, quick ? 100'000 : 1'000'000, 10,
      IdentityKind::quadratic);
  add(K::overshoot_dominance, GraphParams::critical(1000), 0, quick ? 100'000 : 1'000'000, 5);
  if (quick) {
    add(K::two_stage, GraphParams::critical(10'000), 0.05, 20'000);
    add(K::walk_identity, GraphParams::window(10'000, 1.0), 0, 50'000, 0, IdentityKind::drift_linear);
  } else {
    add(K::two_stage, GraphParams::critical(1'000'000), 0.01, 100'000);
    add(K::walk_identity, GraphParams::window(1'000'000, 1.0), 0, 100'000, 0,
        IdentityKind::drift_linear);
    add(K::walk_identity, GraphParams::window(1'000'000, -1.0), 0, 100'000, 0,
        IdentityKind::drift_linear);
    add(K::tail_c1, GraphParams::window(100'000, 1.0), 10.0, 2'000);
  }
  return suite;
}

}  // namespace critgraph
