#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace critgraph {

struct BoundCondition {
  std::string text;
  bool satisfied = false;
};

/// A closed-form probability bound with its preconditions.
///
/// value = min(raw_value, 1). A failed precondition never hides the number;
/// it only clears `valid`. Conditions the analysis leaves unquantified
/// ("n large enough") go into `advisories` and do not affect `valid`.
struct BoundReport {
  std::string name;
  double value = 1.0;
  double raw_value = 1.0;
  bool valid = false;
  std::vector<BoundCondition> conditions;
  std::vector<std::string> advisories;
};

struct BoundPair {
  BoundReport per_vertex;
  BoundReport largest;
};

// P(|C1| > A n^(2/3)) <= 6 A^(-3/2), valid for A > 1 at p = 1/n.
BoundReport easy_bound_c1(double A);

// P(|C(v)| > T) <= 3 / sqrt(T), valid for 9 <= T <= (n-3)^2 at p = 1/n.
BoundReport easy_bound_cv(std::int64_t T, std::int64_t n);

// 4 n^(-1/3) e^(-A^2(A-4)/32) and (4/A) e^(-A^2(A-4)/32); n > 1000, A > 8.
BoundPair exp_tail_bounds(double A, std::int64_t n);

// P(|C1| < floor(delta n^(2/3))) <= 15 delta^(3/5).
BoundReport lower_tail_bound(double delta, std::int64_t n);

// Critical-window bounds for P(|C(v)| >= A n^(2/3)) and P(|C1| >= A n^(2/3)).
BoundPair window_tail_bounds(double A, double lambda, std::int64_t n);

// Best available bound on P(|C1| > A n^(2/3)) at p = 1/n: the minimum over
// the valid members of {easy, exponential-tail largest}. Name records the choice.
BoundReport c1_upper_bound(double A, std::int64_t n);

// Best available bound on P(|C(v)| > floor(A n^(2/3))) at p = 1/n.
BoundReport cv_upper_bound(double A, std::int64_t n);

// Stage-1 failure P(tau_h = T1) <= 32 h^3 / n and
// P(tau_0 < T2) <= 32 h^3 / n + 2 T2 / h^2.
BoundPair two_stage_bounds(std::int64_t h, std::int64_t t2, std::int64_t n);

// Walk bounds at p = 1/n with barrier H.
BoundReport walk_hit_bound(std::int64_t H);                        // 1/H
double walk_mean_gamma_bound(std::int64_t H);                      // H + 3
BoundReport walk_capped_positive_bound(std::int64_t H);            // 3/H
// Critical-window walk with barrier ceil(n^(1/3)).
BoundReport drift_walk_hit_bound(double lambda, std::int64_t n);   // lambda > 0
double drift_walk_mean_gamma_bound(double lambda, std::int64_t n); // lambda != 0

std::string format_conditions(const BoundReport& report);

}  // namespace critgraph
