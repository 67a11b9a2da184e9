#include "critgraph/explore.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace critgraph {

namespace mp = boost::multiprecision;

ExplorationProcess::ExplorationProcess(const GraphParams& params)
    : n_(params.n), sampler_(params.p) {
  params.validate();
}

ComponentRun explore_component(const GraphParams& params, RngStream& rng, bool record_trace,
                               std::size_t trace_cap) {
  ExplorationProcess proc(params);
  ComponentRun run;
  while (true) {
    const std::int64_t y = proc.step(rng);
    if (record_trace) {
      if (run.trace.size() < trace_cap) {
        run.trace.push_back(y);
      } else {
        run.trace_truncated = true;
      }
    }
    if (y == 0) break;
  }
  run.size = proc.time();
  return run;
}

namespace {

struct TopTwo {
  std::int64_t first = 0;
  std::int64_t second = 0;
  void add(std::int64_t s) noexcept {
    if (s > first) {
      second = first;
      first = s;
    } else if (s > second) {
      second = s;
    }
  }
};

}  // namespace

SweepResult sweep_components(const GraphParams& params, RngStream& rng) {
  ExplorationProcess proc(params);
  SweepResult out;
  TopTwo top;
  std::int64_t last_zero = 0;
  while (!proc.finished()) {
    if (proc.step(rng) == 0) {
      const std::int64_t size = proc.time() - last_zero;
      out.sizes.push_back(size);
      top.add(size);
      last_zero = proc.time();
    }
  }
  out.largest = top.first;
  out.second_largest = top.second;
  return out;
}

SweepSummary sweep_streaming(const GraphParams& params, RngStream& rng, std::int64_t stop_at_size) {
  ExplorationProcess proc(params);
  SweepSummary out;
  TopTwo top;
  const std::int64_t n = params.n;
  std::int64_t last_zero = 0;
  if (stop_at_size > 0 && n < stop_at_size) {
    // No component can reach the target; nothing to explore.
    out.complete = false;
    return out;
  }
  while (!proc.finished()) {
    const std::int64_t y = proc.step(rng);
    const std::int64_t t = proc.time();
    if (y == 0) {
      const std::int64_t size = t - last_zero;
      top.add(size);
      ++out.count;
      last_zero = t;
      if (stop_at_size > 0) {
        if (size >= stop_at_size) {
          out.reached = true;
          out.complete = t == n;
          break;
        }
        if (t < n && n - t < stop_at_size) {
          out.complete = false;
          break;
        }
      }
    } else if (stop_at_size > 0 && t - last_zero + y >= stop_at_size) {
      top.add(t - last_zero + y);
      out.reached = true;
      out.complete = false;
      break;
    }
  }
  out.largest = top.first;
  out.second_largest = top.second;
  out.steps = proc.time();
  return out;
}

StageParams stage_params(double delta, std::int64_t n) {
  if (!(delta > 0.0 && delta < 0.1)) {
    throw ParameterError("stage parameters need 0 < delta < 1/10");
  }
  if (n < 1 || !lower_bound_size_ok(delta, n)) {
    throw ParameterError("stage parameters need n > 200 / delta^(3/5)");
  }
  StageParams s;
  s.t2 = floor_coef_n23(delta, n);

  // h = floor(x) with x^5 = delta n^(5/3) / 24, i.e. largest h with
  // (24 h^5)^3 <= delta^3 n^5.
  const mp::cpp_rational d(delta);
  const mp::cpp_rational nn(n);
  const mp::cpp_rational target = d * d * d * nn * nn * nn * nn * nn;
  auto fits = [&](std::int64_t h) {
    mp::cpp_rational hr(h);
    const mp::cpp_rational v = 24 * hr * hr * hr * hr * hr;
    return v * v * v <= target;
  };
  auto h = static_cast<std::int64_t>(std::floor(
      std::pow(static_cast<long double>(delta), 0.2L) *
      std::cbrt(static_cast<long double>(n)) / std::pow(24.0L, 0.2L)));
  if (h < 0) h = 0;
  while (h > 0 && !fits(h)) --h;
  while (fits(h + 1)) ++h;
  if (h < 1) throw ParameterError("stage parameters give h = 0");
  s.h = h;
  s.t1 = (n + 8 * h - 1) / (8 * h);

  s.h_at_least_3 = h >= 3;
  s.h_below_sqrt_n_over_4 = 16 * static_cast<__int128>(h) * h < n;
  s.t2_within_n_over_8h = 8 * static_cast<__int128>(h) * s.t2 <= n;
  return s;
}

TwoStageOutcome run_two_stage(const GraphParams& params, const StageParams& stage, RngStream& rng) {
  if (stage.h < 1 || stage.t1 < 1 || stage.t2 < 1) {
    throw ParameterError("two-stage run needs h, T1, T2 >= 1");
  }
  ExplorationProcess proc(params);
  TwoStageOutcome out;

  out.tau_h = stage.t1;
  for (std::int64_t t = 1; t <= stage.t1 && !proc.finished(); ++t) {
    if (proc.step(rng) >= stage.h) {
      out.tau_h = t;
      out.reached_h = true;
      break;
    }
  }
  if (!out.reached_h) {
    // Exhausted graphs stop early; tau_h is still T1 by definition.
    while (proc.time() < stage.t1 && !proc.finished()) proc.step(rng);
  }

  if (proc.active() == 0) {
    out.tau_0 = 0;
    return out;
  }
  for (std::int64_t s = 1; s <= stage.t2; ++s) {
    if (proc.step(rng) == 0) {
      out.tau_0 = s;
      return out;
    }
  }
  out.tau_0 = stage.t2;
  out.survived = true;
  return out;
}

}  // namespace critgraph
