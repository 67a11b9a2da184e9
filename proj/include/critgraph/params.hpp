#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace critgraph {

/// Model parameters for G(n, p).
///
/// Window parameters p = 1/n + lambda * n^(-4/3) are evaluated once in long
/// double and rounded to the nearest double, so the stored p is within one
/// ulp of the exact value. `critical(n)` stores the correctly rounded 1/n.
struct GraphParams {
  std::int64_t n = 1;
  double p = 1.0;
  std::optional<double> lambda;

  static GraphParams critical(std::int64_t n);
  static GraphParams window(std::int64_t n, double lambda);
  static GraphParams with_p(std::int64_t n, double p);

  // Throws ParameterError unless n >= 1 and p in [0, 1].
  void validate() const;

  std::string describe() const;
};

double window_probability(std::int64_t n, double lambda);

// Exact floor / ceil of coef * n^(2/3) for coef >= 0. Uses integer cube
// comparisons on the exact binary value of coef, so perfect cubes such as
// n = 1e6 land on the right integer.
std::int64_t floor_coef_n23(double coef, std::int64_t n);
std::int64_t ceil_coef_n23(double coef, std::int64_t n);

// Exact floor of n^(1/3) and ceil of n^(1/3).
std::int64_t floor_cbrt(std::int64_t n);
std::int64_t ceil_cbrt(std::int64_t n);

// Exact test of n > 200 / delta^(3/5).
bool lower_bound_size_ok(double delta, std::int64_t n);

}  // namespace critgraph
