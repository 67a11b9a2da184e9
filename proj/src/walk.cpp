#include "critgraph/walk.hpp"

#include <algorithm>

#include "critgraph/distributions.hpp"

namespace critgraph {

void WalkParams::validate() const {
  if (n < 0) throw ParameterError("walk increment trial count must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("walk probability must lie in [0,1]");
  if (barrier < 1) throw ParameterError("walk barrier must be >= 1");
  if (cap && *cap < 1) throw ParameterError("walk cap must be >= 1");
}

WalkOutcome run_walk(const WalkParams& params, RngStream& rng) {
  params.validate();
  const BinomialSampler xi(params.p);
  const std::int64_t limit = params.cap.value_or(0);
  WalkOutcome out;
  std::int64_t s = 1;
  std::int64_t t = 0;
  for (;;) {
    ++t;
    s += xi(params.n, rng) - 1;
    if (s >= params.barrier) {
      out.hit_top = true;
      out.overshoot = s - params.barrier;
      break;
    }
    if (s == 0) break;
    if (t == limit) {
      out.capped = true;
      break;
    }
  }
  out.gamma = t;
  out.s_final = s;
  return out;
}

WalkOutcome run_walk_capped(const WalkParams& params, RngStream& rng) {
  WalkParams capped = params;
  capped.cap = params.barrier * params.barrier;
  return run_walk(capped, rng);
}

std::int64_t window_barrier(std::int64_t n) { return ceil_cbrt(n); }

WalkParams drift_walk_params(std::int64_t n, double lambda, std::optional<std::int64_t> barrier) {
  WalkParams w;
  w.n = n;
  w.p = window_probability(n, lambda);
  w.barrier = barrier.value_or(window_barrier(n));
  w.validate();
  return w;
}

WalkOutcome run_drift_walk(const WalkParams& params, double lambda, RngStream& rng) {
  WalkParams drifted = params;
  drifted.p = window_probability(params.n, lambda);
  return run_walk(drifted, rng);
}

OvershootSample collect_overshoots(const WalkParams& params, std::uint64_t trials,
                                   std::uint64_t master_seed, Execution exec) {
  params.validate();
  constexpr std::uint64_t kChunk = 1u << 16;
  OvershootSample sample;
  sample.trials = trials;
  for (std::uint64_t first = 0; first < trials; first += kChunk) {
    const std::uint64_t count = std::min(kChunk, trials - first);
    const auto chunk = map_trials<std::int64_t>(first, count, exec, [&](std::uint64_t trial) {
      RngStream rng(master_seed, trial);
      const WalkOutcome w = run_walk(params, rng);
      return w.hit_top ? *w.overshoot : std::int64_t{-1};
    });
    for (const std::int64_t v : chunk) {
      if (v >= 0) sample.values.push_back(v);
    }
  }
  return sample;
}

CoupledRun run_coupled(const GraphParams& graph, std::int64_t barrier, RngStream& rng) {
  graph.validate();
  if (barrier < 1) throw ParameterError("walk barrier must be >= 1");
  const BinomialSampler xi_sampler(graph.p);
  const std::int64_t n = graph.n;
  CoupledRun run;
  std::int64_t s = 1;
  std::int64_t y = 1;
  bool component_open = true;
  std::int64_t t = 0;
  for (;;) {
    ++t;
    const std::int64_t xi = xi_sampler(n, rng);
    if (component_open) {
      const std::int64_t neutral = n - y - (t - 1);
      const std::int64_t eta = sample_hypergeometric(n, xi, neutral, rng);
      y += eta - 1;
      if (y == 0) {
        component_open = false;
        run.component_size = t;
      }
    }
    s += xi - 1;
    if (y > s) {
      run.dominated = false;
      run.max_gap_violation = std::max(run.max_gap_violation, y - s);
    }
    if (s >= barrier || s == 0) break;
  }
  run.walk.gamma = t;
  run.walk.s_final = s;
  run.walk.hit_top = s >= barrier;
  if (run.walk.hit_top) run.walk.overshoot = s - barrier;
  return run;
}

}  // namespace critgraph
