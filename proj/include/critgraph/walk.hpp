#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "critgraph/params.hpp"
#include "critgraph/parallel.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

// S_0 = 1, S_t = S_{t-1} + xi_t - 1 with xi_t ~ Bin(n, p) i.i.d.
// gamma = min{t >= 1 : S_t >= barrier or S_t = 0}, optionally capped.
struct WalkParams {
  std::int64_t n = 1;
  double p = 0.0;
  std::int64_t barrier = 1;
  std::optional<std::int64_t> cap;

  void validate() const;
};

struct WalkOutcome {
  std::int64_t gamma = 0;
  std::int64_t s_final = 0;
  std::optional<std::int64_t> overshoot;  // s_final - barrier when hit_top
  bool hit_top = false;
  bool capped = false;  // stopped by the cap before gamma

  bool positive_at_stop() const noexcept { return s_final > 0; }
};

WalkOutcome run_walk(const WalkParams& params, RngStream& rng);

// gamma* = gamma ^ H^2; params.cap is replaced by barrier^2.
WalkOutcome run_walk_capped(const WalkParams& params, RngStream& rng);

// ceil(n^(1/3)), the barrier used in the critical-window analysis.
std::int64_t window_barrier(std::int64_t n);

// Walk params for p = 1/n + lambda n^(-4/3); barrier defaults to ceil(n^(1/3)).
WalkParams drift_walk_params(std::int64_t n, double lambda,
                             std::optional<std::int64_t> barrier = std::nullopt);

// run_walk with p recomputed from (params.n, lambda).
WalkOutcome run_drift_walk(const WalkParams& params, double lambda, RngStream& rng);

struct OvershootSample {
  std::vector<std::int64_t> values;  // in trial order
  std::uint64_t trials = 0;
};

// Overshoots of the runs that hit the barrier. Trial i uses stream
// (master_seed, i).
OvershootSample collect_overshoots(const WalkParams& params, std::uint64_t trials,
                                   std::uint64_t master_seed,
                                   Execution exec = Execution::parallel);

/// One path of the exploration process coupled beneath the walk.
///
/// xi_t ~ Bin(n, p) is drawn first; eta_t counts the successes that fall in
/// a uniformly chosen subset of N_{t-1} of the n trials (hypergeometric
/// thinning), so eta_t ~ Bin(N_{t-1}, p) and eta_t <= xi_t on every path.
struct CoupledRun {
  WalkOutcome walk;
  std::int64_t component_size = 0;  // 0 if still active at gamma
  std::int64_t max_gap_violation = 0;  // max over t <= gamma of Y_t - S_t, clamped at 0
  bool dominated = true;              // S_t >= Y_t for all t <= gamma
};

CoupledRun run_coupled(const GraphParams& graph, std::int64_t barrier, RngStream& rng);

}  // namespace critgraph
