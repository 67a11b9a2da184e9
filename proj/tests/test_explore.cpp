#include <numeric>

#include "critgraph/explore.hpp"
#include "critgraph/oracle.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace critgraph;
using critgraph::testing::standard_error;

namespace {

std::vector<double> component_histogram(const GraphParams& g, std::uint64_t runs, std::uint64_t seed) {
  std::vector<double> h(static_cast<std::size_t>(g.n + 1), 0.0);
  for (std::uint64_t i = 0; i < runs; ++i) {
    RngStream rng(seed, i);
    h[static_cast<std::size_t>(explore_component(g, rng).size)] += 1.0;
  }
  for (double& x : h) x /= static_cast<double>(runs);
  return h;
}

std::vector<double> largest_histogram(const GraphParams& g, std::uint64_t runs, std::uint64_t seed) {
  std::vector<double> h(static_cast<std::size_t>(g.n + 1), 0.0);
  for (std::uint64_t i = 0; i < runs; ++i) {
    RngStream rng(seed, i);
    h[static_cast<std::size_t>(sweep_components(g, rng).largest)] += 1.0;
  }
  for (double& x : h) x /= static_cast<double>(runs);
  return h;
}

}  // namespace

TEST_CASE("process state bookkeeping") {
  ExplorationProcess proc(GraphParams::critical(100));
  CHECK(proc.active() == 1);
  CHECK(proc.neutral() == 99);
  RngStream rng(1, 0);
  while (!proc.finished()) {
    proc.step(rng);
    const auto total = proc.active() + proc.time() + proc.neutral();
    REQUIRE(proc.active() >= 0);
    REQUIRE(proc.neutral() >= 0);
    REQUIRE((total == 100 || (total == 99 && proc.active() == 0)));
  }
  CHECK(proc.active() == 0);
}

TEST_CASE("explore_component trivial cases") {
  RngStream rng(2, 0);
  CHECK(explore_component(GraphParams::with_p(1, 0.7), rng).size == 1);
  CHECK(explore_component(GraphParams::with_p(1, 1.0), rng).size == 1);
  for (int i = 0; i < 50; ++i) CHECK(explore_component(GraphParams::with_p(10, 0.0), rng).size == 1);
  CHECK(explore_component(GraphParams::with_p(10, 1.0), rng).size == 10);
  CHECK_THROWS_AS(GraphParams::with_p(10, 1.5), ParameterError);
}

TEST_CASE("trace has length tau and ends at zero") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    RngStream rng(3, i);
    const auto run = explore_component(GraphParams::critical(1000), rng, true);
    REQUIRE(static_cast<std::int64_t>(run.trace.size()) == run.size);
    REQUIRE(run.trace.back() == 0);
    for (std::size_t t = 0; t + 1 < run.trace.size(); ++t) REQUIRE(run.trace[t] > 0);
  }
  RngStream rng(3, 0);
  const auto capped = explore_component(GraphParams::with_p(50, 1.0), rng, true, 10);
  CHECK(capped.size == 50);
  CHECK(capped.trace.size() == 10);
  CHECK(capped.trace_truncated);
}

TEST_CASE("|C(v)| at n=3, p=1/3 matches enumeration") {
  // Enumeration of the 8 graphs: P = 4/9, 8/27, 7/27.
  constexpr std::uint64_t kRuns = 1'000'000;
  const auto h = component_histogram(GraphParams::with_p(3, 1.0 / 3.0), kRuns, 10);
  const double expect[] = {0.0, 4.0 / 9.0, 8.0 / 27.0, 7.0 / 27.0};
  for (int s = 1; s <= 3; ++s) {
    CAPTURE(s);
    CHECK(std::abs(h[s] - expect[s]) <= 3.0 * standard_error(expect[s], kRuns));
  }
}

TEST_CASE("|C(v)| distribution is within TV 0.005 of the exact oracle") {
  std::uint64_t seed = 20;
  for (const std::int64_t n : {3, 4, 5}) {
    for (const double p : {0.2, 1.0 / static_cast<double>(n), 0.5}) {
      CAPTURE(n);
      CAPTURE(p);
      const auto exact = enumerate_exact(n, EdgeProbability::real(p));
      const auto h = component_histogram(GraphParams::with_p(n, p), 1'000'000, seed++);
      CHECK(total_variation(h, exact.cv.by_size()) <= 0.005);
    }
  }
}

TEST_CASE("sweep trivial cases") {
  RngStream rng(4, 0);
  const auto empty = sweep_components(GraphParams::with_p(5, 0.0), rng);
  CHECK(empty.sizes == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(empty.largest == 1);
  CHECK(empty.second_largest == 1);
  const auto full = sweep_components(GraphParams::with_p(5, 1.0), rng);
  CHECK(full.sizes == std::vector<std::int64_t>{5});
  CHECK(full.largest == 5);
  CHECK(full.second_largest == 0);
}

TEST_CASE("sweep sizes always sum to n") {
  RngStream pick(5, 0);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto n = static_cast<std::int64_t>(1 + pick.next_u64() % 3000);
    const double p = pick.uniform() * 3.0 / static_cast<double>(n);
    RngStream rng(6, i);
    const auto r = sweep_components(GraphParams::with_p(n, std::min(p, 1.0)), rng);
    REQUIRE(std::accumulate(r.sizes.begin(), r.sizes.end(), std::int64_t{0}) == n);
    REQUIRE(*std::min_element(r.sizes.begin(), r.sizes.end()) >= 1);
    REQUIRE(r.largest == *std::max_element(r.sizes.begin(), r.sizes.end()));
    REQUIRE(r.largest >= r.second_largest);
  }
}

TEST_CASE("|C1| at n=3, p=1/3: 8/27, 12/27, 7/27") {
  constexpr std::uint64_t kRuns = 1'000'000;
  const auto h = largest_histogram(GraphParams::with_p(3, 1.0 / 3.0), kRuns, 30);
  const double expect[] = {0.0, 8.0 / 27.0, 12.0 / 27.0, 7.0 / 27.0};
  for (int s = 1; s <= 3; ++s) {
    CAPTURE(s);
    CHECK(std::abs(h[s] - expect[s]) <= 3.0 * standard_error(expect[s], kRuns));
  }
}

TEST_CASE("streaming sweep agrees with the full sweep on the same stream") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto g = GraphParams::critical(20'000);
    RngStream a(7, i), b(7, i);
    const auto full = sweep_components(g, a);
    const auto stream = sweep_streaming(g, b);
    REQUIRE(stream.complete);
    REQUIRE(stream.largest == full.largest);
    REQUIRE(stream.second_largest == full.second_largest);
    REQUIRE(stream.count == static_cast<std::int64_t>(full.sizes.size()));
    REQUIRE(stream.steps == g.n);
  }
}

TEST_CASE("early stop reports reached exactly when some component reaches the size") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto g = GraphParams::critical(5'000);
    RngStream a(8, i), b(8, i);
    const auto full = sweep_components(g, a);
    const std::int64_t target = 100 + static_cast<std::int64_t>(i % 200);
    const auto s = sweep_streaming(g, b, target);
    REQUIRE(s.reached == (full.largest >= target));
    REQUIRE(s.steps <= g.n);
  }
}

TEST_CASE("stage parameters") {
  const auto s = stage_params(0.01, 1'000'000);
  CHECK(s.h == 21);
  CHECK(s.t1 == 5953);
  CHECK(s.t2 == 100);
  CHECK(s.side_conditions_hold());
  CHECK(stage_params(0.05, 1'000'000).t2 == 500);
  CHECK_THROWS_AS(stage_params(0.2, 1'000'000), ParameterError);
  CHECK_THROWS_AS(stage_params(0.0, 1'000'000), ParameterError);
  // 200 / 0.001^(3/5) = 12619.15
  CHECK_THROWS_AS(stage_params(0.001, 12'619), ParameterError);
  CHECK_NOTHROW(stage_params(0.001, 12'620));
}

TEST_CASE("two-stage run respects its caps") {
  const StageParams unit{1, 7, 3};
  for (std::uint64_t i = 0; i < 2000; ++i) {
    RngStream rng(9, i);
    const auto o = run_two_stage(GraphParams::critical(1000), unit, rng);
    REQUIRE(o.tau_h >= 1);
    REQUIRE(o.tau_h <= 7);
    REQUIRE(o.tau_0 >= 0);
    REQUIRE(o.tau_0 <= 3);
    if (o.survived) REQUIRE(o.tau_0 == 3);
    // With h = 1 the ascent succeeds at step 1 unless Y_1 = 0, and then
    // again at the first later step with Y > 0.
    if (o.reached_h && o.tau_h == 1) REQUIRE(o.reached_h);
  }
}

TEST_CASE("two-stage inequalities at n = 1e6, delta = 0.01") {
  const auto g = GraphParams::critical(1'000'000);
  const auto s = stage_params(0.01, g.n);
  constexpr std::uint64_t kRuns = 20'000;
  std::uint64_t fail1 = 0, below = 0;
  for (std::uint64_t i = 0; i < kRuns; ++i) {
    RngStream rng(10, i);
    const auto o = run_two_stage(g, s, rng);
    fail1 += o.reached_h ? 0 : 1;
    below += o.survived ? 0 : 1;
  }
  const double f1 = static_cast<double>(fail1) / kRuns;
  const double b2 = static_cast<double>(below) / kRuns;
  const double stage1 = 32.0 * 21 * 21 * 21 / 1e6;
  CHECK(f1 <= stage1 + 3 * standard_error(f1, kRuns));
  CHECK(b2 <= stage1 + 200.0 / 441.0 + 3 * standard_error(b2, kRuns));
}

TEST_CASE("|C1| below delta n^(2/3) is rarer than 15 delta^(3/5)") {
  const auto g = GraphParams::critical(100'000);
  const std::int64_t t2 = floor_coef_n23(0.01, g.n);
  CHECK(t2 == 21);
  std::uint64_t small = 0;
  constexpr std::uint64_t kRuns = 2000;
  for (std::uint64_t i = 0; i < kRuns; ++i) {
    RngStream rng(11, i);
    small += sweep_streaming(g, rng, t2).reached ? 0 : 1;
  }
  CHECK(static_cast<double>(small) / kRuns <= 15.0 * std::pow(0.01, 0.6));
}

TEST_CASE("exact threshold integerization") {
  CHECK(floor_coef_n23(1.0, 1'000'000) == 10'000);
  CHECK(ceil_coef_n23(1.0, 1'000'000) == 10'000);
  CHECK(floor_coef_n23(10.0, 1'000'000) == 100'000);
  CHECK(floor_coef_n23(2.0, 10'000) == 928);   // 2 * 464.158...
  CHECK(ceil_coef_n23(2.0, 10'000) == 929);
  CHECK(floor_coef_n23(1.0, 1'000'000'000) == 1'000'000);
  CHECK(floor_cbrt(999) == 9);
  CHECK(floor_cbrt(1000) == 10);
  CHECK(ceil_cbrt(1001) == 11);
  CHECK(window_probability(1000, 0.0) == 1.0 / 1000.0);
}
