#include "critgraph/bounds.hpp"
#include "critgraph/distributions.hpp"
#include "critgraph/harness.hpp"
#include "critgraph/walk.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace critgraph;
using critgraph::testing::standard_error;

TEST_CASE("barrier one stops after a single step") {
  const WalkParams w{20, 0.1, 1, std::nullopt};
  for (std::uint64_t i = 0; i < 2000; ++i) {
    RngStream a(1, i), b(1, i);
    const auto o = run_walk(w, a);
    const std::int64_t xi = sample_binomial(20, 0.1, b);
    REQUIRE(o.gamma == 1);
    REQUIRE(o.s_final == xi);
    REQUIRE(o.hit_top == (xi >= 1));
    if (o.hit_top) REQUIRE(*o.overshoot == xi - 1);
    const auto c = run_walk_capped(w, b);
    REQUIRE(c.gamma == 1);
  }
}

TEST_CASE("outcome invariants") {
  const WalkParams w{1000, 1e-3, 10, std::nullopt};
  for (std::uint64_t i = 0; i < 20'000; ++i) {
    RngStream rng(2, i);
    const auto o = i % 2 ? run_walk(w, rng) : run_walk_capped(w, rng);
    REQUIRE(o.gamma >= 1);
    if (o.hit_top) {
      REQUIRE(o.overshoot.has_value());
      REQUIRE(*o.overshoot >= 0);
      REQUIRE(o.s_final >= 10);
    } else {
      REQUIRE_FALSE(o.overshoot.has_value());
    }
    if (!o.hit_top && !o.capped) REQUIRE(o.s_final == 0);
    if (o.capped) REQUIRE(o.gamma == 100);
  }
}

TEST_CASE("parameter errors") {
  RngStream rng(3, 0);
  CHECK_THROWS_AS(run_walk({10, 0.1, 0, std::nullopt}, rng), ParameterError);
  CHECK_THROWS_AS(run_walk({10, 1.1, 5, std::nullopt}, rng), ParameterError);
  CHECK_THROWS_AS(run_walk({10, 0.1, 5, 0}, rng), ParameterError);
}

TEST_CASE("p = 0 walk falls to zero and gives an empty overshoot sample") {
  RngStream rng(4, 0);
  const auto o = run_walk({100, 0.0, 5, std::nullopt}, rng);
  CHECK(o.gamma == 1);
  CHECK(o.s_final == 0);
  const auto s = collect_overshoots({100, 0.0, 5, std::nullopt}, 1000, 4);
  CHECK(s.values.empty());
  CHECK(s.trials == 1000);
  CHECK(dominance_verdict(s.values, 100, 0.0, 0.01).indeterminate);
}

TEST_CASE("walk inequalities at n = 1000, H = 10") {
  const WalkParams w{1000, 1e-3, 10, std::nullopt};
  constexpr std::uint64_t kRuns = 200'000;
  std::uint64_t hits = 0;
  std::vector<double> gammas;
  gammas.reserve(kRuns);
  for (std::uint64_t i = 0; i < kRuns; ++i) {
    RngStream rng(5, i);
    const auto o = run_walk(w, rng);
    hits += o.hit_top ? 1 : 0;
    gammas.push_back(static_cast<double>(o.gamma));
  }
  const double ph = static_cast<double>(hits) / kRuns;
  CHECK(ph <= walk_hit_bound(10).value + 3 * standard_error(ph, kRuns));
  const auto g = mean_estimate(gammas);
  CHECK(g.mean <= walk_mean_gamma_bound(10) + 3 * g.std_error);
}

TEST_CASE("capped walk positive probability at n = 1e4, H = 30") {
  const WalkParams w{10'000, 1e-4, 30, std::nullopt};
  constexpr std::uint64_t kRuns = 50'000;
  std::uint64_t pos = 0;
  for (std::uint64_t i = 0; i < kRuns; ++i) {
    RngStream rng(6, i);
    const auto o = run_walk_capped(w, rng);
    if (o.capped) REQUIRE(o.gamma == 900);
    pos += o.positive_at_stop() ? 1 : 0;
  }
  const double pp = static_cast<double>(pos) / kRuns;
  CHECK(pp <= 0.1 + 3 * standard_error(pp, kRuns));
}

TEST_CASE("zero drift walk equals the critical walk path by path") {
  const auto w = drift_walk_params(1'000'000, 0.0);
  CHECK(w.barrier == 100);
  CHECK(w.p == 1e-6);
  for (std::uint64_t i = 0; i < 500; ++i) {
    RngStream a(7, i), b(7, i);
    const auto x = run_drift_walk(w, 0.0, a);
    const auto y = run_walk({1'000'000, 1e-6, 100, std::nullopt}, b);
    REQUIRE(x.gamma == y.gamma);
    REQUIRE(x.s_final == y.s_final);
  }
  CHECK(window_barrier(1'000'001) == 101);
}

TEST_CASE("overshoots at H = 1 are xi - 1 given xi >= 1") {
  const WalkParams w{10, 0.3, 1, std::nullopt};
  const auto s = collect_overshoots(w, 5000, 8, Execution::serial);
  std::size_t k = 0;
  for (std::uint64_t i = 0; i < 5000; ++i) {
    RngStream rng(8, i);
    const std::int64_t xi = sample_binomial(10, 0.3, rng);
    if (xi >= 1) {
      REQUIRE(k < s.values.size());
      REQUIRE(s.values[k++] == xi - 1);
    }
  }
  CHECK(k == s.values.size());
  CHECK(dominance_verdict(s.values, 10, 0.3, 0.01).pass);
}

TEST_CASE("serial and parallel overshoot collection agree") {
  const WalkParams w{1000, 1e-3, 5, std::nullopt};
  const auto a = collect_overshoots(w, 100'000, 9, Execution::serial);
  const auto b = collect_overshoots(w, 100'000, 9, Execution::parallel);
  CHECK(a.values == b.values);
}

TEST_CASE("overshoot dominance at n = 1000, H = 5") {
  const auto s = collect_overshoots({1000, 1e-3, 5, std::nullopt}, 1'000'000, 10);
  CHECK(s.values.size() > 50'000);
  const auto v = dominance_verdict(s.values, 1000, 1e-3, 0.01);
  CHECK_FALSE(v.indeterminate);
  CHECK(v.pass);
  CHECK(v.max_violation <= v.epsilon);
}

TEST_CASE("coupled exploration stays below the walk") {
  for (const std::int64_t n : {50, 1000, 100'000}) {
    const auto g = GraphParams::critical(n);
    std::uint64_t finished = 0;
    for (std::uint64_t i = 0; i < 5000; ++i) {
      RngStream rng(11, i);
      const auto run = run_coupled(g, 20, rng);
      REQUIRE(run.dominated);
      REQUIRE(run.max_gap_violation == 0);
      if (run.component_size > 0) {
        ++finished;
        REQUIRE(run.component_size <= run.walk.gamma);
      }
      // S hitting 0 forces Y to 0 by then.
      if (!run.walk.hit_top) REQUIRE(run.component_size > 0);
    }
    CHECK(finished > 0);
  }
}

TEST_CASE("coupled component size has the law of |C(v)| at n = 4") {
  // Increments are at most 3, so S needs 33 steps to reach 100 while the
  // component closes within 4.
  const auto g = GraphParams::with_p(4, 0.25);
  constexpr std::uint64_t kRuns = 400'000;
  std::vector<double> h(5, 0.0);
  for (std::uint64_t i = 0; i < kRuns; ++i) {
    RngStream rng(12, i);
    const auto run = run_coupled(g, 100, rng);
    REQUIRE(run.component_size >= 1);
    h[static_cast<std::size_t>(run.component_size)] += 1.0 / kRuns;
  }
  const double exact[] = {0, 27.0 / 64, 243.0 / 1024, 405.0 / 2048, 293.0 / 2048};
  for (int s = 1; s <= 4; ++s) {
    CAPTURE(s);
    CHECK(std::abs(h[s] - exact[s]) <= 4 * standard_error(exact[s], kRuns));
  }
}

TEST_CASE("optional stopping identities at n = 1000, H = 10") {
  const WalkParams w{1000, 1e-3, 10, std::nullopt};
  const auto a = martingale_identity_check(IdentityKind::mean_s_gamma, w, 200'000, 13);
  CHECK(std::abs(a.z) <= 4.0);
  CHECK(a.pass);
  const auto b = martingale_identity_check(IdentityKind::quadratic, w, 200'000, 14);
  CHECK(std::abs(b.z) <= 4.0);
  CHECK(b.pass);
  CHECK_THROWS_AS(martingale_identity_check(IdentityKind::quadratic, {1000, 2e-3, 10, std::nullopt},
                                            10, 1),
                  ParameterError);
}

TEST_CASE("drift identity at n = 1e5, lambda = 1") {
  const auto w = drift_walk_params(100'000, 1.0);
  const auto r = martingale_identity_check(IdentityKind::drift_linear, w, 50'000, 15);
  CHECK(r.pass);
}
