#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "critgraph/bounds.hpp"
#include "critgraph/params.hpp"
#include "critgraph/parallel.hpp"
#include "critgraph/walk.hpp"

namespace critgraph {

inline constexpr const char* kVersion = "0.1.0";

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
  tail_c1,
  tail_cv,
  lower_c1,
  walk_identity,
  overshoot_dominance,
  two_stage,
  oracle_equivalence,
};

enum class IdentityKind { mean_s_gamma, quadratic, drift_linear };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);
std::string to_string(IdentityKind kind);
IdentityKind parse_identity_kind(const std::string& name);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::tail_c1;
  GraphParams params;
  // A for tail kinds, delta for lower_c1 and two_stage; unused otherwise.
  double scale = 0.0;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  double alpha = 0.01;
  // Walk kinds: barrier H (0 picks the default: 10 for critical walks,
  // ceil(n^(1/3)) for drift walks).
  std::int64_t barrier = 0;
  IdentityKind identity = IdentityKind::mean_s_gamma;
  double tv_tolerance = 0.005;
  double step_budget = 1e11;
  int threads = 0;  // 0 = runtime default; echoed into the manifest

  void validate() const;
};

// Integer event threshold: floor(A n^(2/3)) for strict-tail kinds at
// p = 1/n, ceil(A n^(2/3)) for window kinds (events of the form >=),
// floor(delta n^(2/3)) for lower_c1. Zero when the kind has none.
std::int64_t event_threshold(const ExperimentSpec& spec);

// Estimated process steps; run_experiment refuses specs above step_budget.
double estimate_work(const ExperimentSpec& spec);

struct TailEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;   // one-sided Wilson lower bound at level alpha
  double ci_high = 1.0;  // one-sided Wilson upper bound at level alpha
};

TailEstimate wilson_estimate(std::uint64_t successes, std::uint64_t trials, double alpha);

// Mean and standard error of a sample, with the z-score against `target`.
struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t count = 0;
};
MeanEstimate mean_estimate(const std::vector<double>& values);

struct CheckResult {
  std::string name;
  std::optional<TailEstimate> estimate;
  std::optional<BoundReport> bound;
  std::optional<double> statistic;
  std::optional<double> limit;
  bool pass = true;
  bool advisory = false;  // reported but does not fail the experiment
  std::string note;
};

struct Manifest {
  std::uint64_t master_seed = 0;
  std::string params;       // full-precision description
  std::string version = kVersion;
  int threads = 0;
  double wall_seconds = 0.0;
};

struct VerdictReport {
  ExperimentSpec spec;
  std::optional<TailEstimate> estimate;
  std::optional<BoundReport> bound;
  bool pass = true;
  std::vector<CheckResult> checks;
  Manifest manifest;
};

VerdictReport run_experiment(const ExperimentSpec& spec, Execution exec = Execution::parallel);

// |C1| of one full streaming sweep per trial, trial i on stream (seed, i).
std::vector<std::int64_t> collect_largest(const GraphParams& params, std::uint64_t trials,
                                          std::uint64_t master_seed,
                                          Execution exec = Execution::parallel);

// Number of trials whose sweep finds a component of size >= size.
std::uint64_t count_component_at_least(const GraphParams& params, std::int64_t size,
                                       std::uint64_t trials, std::uint64_t master_seed,
                                       Execution exec = Execution::parallel);

// Exact Binomial(n, p) CDF at 0..kmax by pmf summation in long double.
std::vector<double> binomial_cdf(std::int64_t n, double p, std::int64_t kmax);

struct DominanceVerdict {
  bool pass = true;
  bool indeterminate = false;  // empty sample
  double max_violation = 0.0;  // max_k (G(k) - F_m(k)), clamped at 0
  double epsilon = 0.0;        // DKW slack sqrt(ln(2/alpha) / (2m))
  std::uint64_t sample_size = 0;
};

// Passes iff the empirical CDF stays >= Bin(n,p) CDF - epsilon on [0, max].
DominanceVerdict dominance_verdict(const std::vector<std::int64_t>& sample, std::int64_t n,
                                   double p, double alpha);

struct IdentityReport {
  IdentityKind kind = IdentityKind::mean_s_gamma;
  MeanEstimate estimate;
  double target = 1.0;
  double z = 0.0;
  bool pass = false;  // |z| <= 4
};

/// Stopped-martingale means over `trials` walks:
///   mean_s_gamma:  E[S_gamma] = 1
///   quadratic:     E[S_gamma^2 - (1 - 1/n) gamma] = 1 (needs p = 1/n)
///   drift_linear:  E[S_gamma - (np - 1) gamma] = 1
IdentityReport martingale_identity_check(IdentityKind kind, const WalkParams& params,
                                         std::uint64_t trials, std::uint64_t master_seed,
                                         Execution exec = Execution::parallel);

// Default verification grid. `quick` keeps n <= 1e4 and trials <= 1e5.
std::vector<ExperimentSpec> default_suite(bool quick, std::uint64_t master_seed);

}  // namespace critgraph
