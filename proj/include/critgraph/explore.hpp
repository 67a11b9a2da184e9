#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "critgraph/distributions.hpp"
#include "critgraph/params.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

inline constexpr std::size_t kDefaultTraceCap = 10'000'000;

/// Counts-only exploration of G(n, p).
///
/// State after step t: Y active vertices, t explored, and
/// N = n - Y - t - [Y == 0] neutral vertices (the indicator removes the
/// vertex that the next restart step will pick). Step t draws
/// eta ~ Bin(N_{t-1}, p) and sets Y_t = Y_{t-1} + eta - 1 if Y_{t-1} > 0,
/// else Y_t = eta. After n steps every vertex is explored and Y_n = 0.
class ExplorationProcess {
 public:
  explicit ExplorationProcess(const GraphParams& params);

  std::int64_t step(RngStream& rng) {
    const std::int64_t eta = sampler_(neutral(), rng);
    active_ = active_ > 0 ? active_ + eta - 1 : eta;
    ++time_;
    return active_;
  }

  std::int64_t time() const noexcept { return time_; }
  std::int64_t active() const noexcept { return active_; }
  // Zero once all n vertices are explored (there is no next restart vertex).
  std::int64_t neutral() const noexcept {
    return std::max<std::int64_t>(0, n_ - active_ - time_ - (active_ == 0 ? 1 : 0));
  }
  bool finished() const noexcept { return time_ >= n_; }

 private:
  std::int64_t n_;
  BinomialSampler sampler_;
  std::int64_t time_ = 0;
  std::int64_t active_ = 1;
};

struct ComponentRun {
  std::int64_t size = 0;
  std::vector<std::int64_t> trace;  // Y_1..Y_size when requested
  bool trace_truncated = false;
};

// |C(v)| for a fixed vertex v: tau = min{t >= 1 : Y_t = 0}.
ComponentRun explore_component(const GraphParams& params, RngStream& rng,
                               bool record_trace = false,
                               std::size_t trace_cap = kDefaultTraceCap);

struct SweepResult {
  std::vector<std::int64_t> sizes;  // discovery order
  std::int64_t largest = 0;
  std::int64_t second_largest = 0;
};

// Full partition of all n vertices; sizes are gaps between zeros of Y.
SweepResult sweep_components(const GraphParams& params, RngStream& rng);

struct SweepSummary {
  std::int64_t largest = 0;
  std::int64_t second_largest = 0;
  std::int64_t count = 0;
  std::int64_t steps = 0;
  // False when the sweep stopped early; largest/second/count then only
  // describe the part explored so far.
  bool complete = true;
  // Some component was seen to reach stop_at_size.
  bool reached = false;
};

/// Constant-memory sweep. With stop_at_size > 0 the sweep halts as soon as
/// the component in progress is known to have at least that many vertices
/// (explored so far plus currently active), or once too few unexplored
/// vertices remain for any later component to reach it.
SweepSummary sweep_streaming(const GraphParams& params, RngStream& rng,
                             std::int64_t stop_at_size = 0);

struct StageParams {
  std::int64_t h = 1;
  std::int64_t t1 = 1;
  std::int64_t t2 = 1;
  bool h_at_least_3 = false;
  bool h_below_sqrt_n_over_4 = false;
  bool t2_within_n_over_8h = false;

  bool side_conditions_hold() const noexcept {
    return h_at_least_3 && h_below_sqrt_n_over_4 && t2_within_n_over_8h;
  }
};

// T2 = floor(delta n^(2/3)), h = floor(delta^(1/5) n^(1/3) / 24^(1/5)),
// T1 = ceil(n / 8h). Requires 0 < delta < 1/10 and n > 200 / delta^(3/5).
StageParams stage_params(double delta, std::int64_t n);

struct TwoStageOutcome {
  std::int64_t tau_h = 0;
  bool reached_h = false;
  std::int64_t tau_0 = 0;
  bool survived = false;
};

// Ascent to height h within T1 steps, then survival for T2 further steps.
// Runs the sweep-mode recursion, so the process restarts at zeros in
// stage 1 exactly as the full exploration would.
TwoStageOutcome run_two_stage(const GraphParams& params, const StageParams& stage,
                              RngStream& rng);

}  // namespace critgraph
