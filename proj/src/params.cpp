#include "critgraph/params.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>

#include "critgraph/rng.hpp"

namespace critgraph {

namespace mp = boost::multiprecision;

GraphParams GraphParams::critical(std::int64_t n) {
  if (n < 1) throw ParameterError("vertex count must be positive");
  return GraphParams{n, 1.0 / static_cast<double>(n), std::nullopt};
}

GraphParams GraphParams::window(std::int64_t n, double lambda) {
  if (n < 1) throw ParameterError("vertex count must be positive");
  GraphParams g{n, window_probability(n, lambda), lambda};
  g.validate();
  return g;
}

GraphParams GraphParams::with_p(std::int64_t n, double p) {
  GraphParams g{n, p, std::nullopt};
  g.validate();
  return g;
}

void GraphParams::validate() const {
  if (n < 1) throw ParameterError("vertex count must be positive");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0,1], got " + std::to_string(p));
  }
}

std::string GraphParams::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << n << " p=" << p;
  if (lambda) os << " lambda=" << *lambda;
  return os.str();
}

double window_probability(std::int64_t n, double lambda) {
  const long double nl = static_cast<long double>(n);
  const long double p = 1.0L / nl + static_cast<long double>(lambda) * std::pow(nl, -4.0L / 3.0L);
  return static_cast<double>(p);
}

namespace {

// Largest t >= 0 with t^3 <= coef^3 * n^2, i.e. floor(coef * n^(2/3)).
std::int64_t floor_exact(double coef, std::int64_t n) {
  if (!(coef >= 0.0) || !std::isfinite(coef)) {
    throw ParameterError("scale coefficient must be finite and nonnegative");
  }
  if (n < 1) throw ParameterError("vertex count must be positive");
  const mp::cpp_rational c(coef);
  const mp::cpp_rational target = c * c * c * mp::cpp_rational(n) * mp::cpp_rational(n);
  auto cube_le = [&](std::int64_t t) {
    const mp::cpp_rational tr(t);
    return tr * tr * tr <= target;
  };
  const long double approx =
      static_cast<long double>(coef) * std::pow(static_cast<long double>(n), 2.0L / 3.0L);
  auto t = static_cast<std::int64_t>(std::floor(approx));
  if (t < 0) t = 0;
  while (t > 0 && !cube_le(t)) --t;
  while (cube_le(t + 1)) ++t;
  return t;
}

}  // namespace

std::int64_t floor_coef_n23(double coef, std::int64_t n) { return floor_exact(coef, n); }

std::int64_t ceil_coef_n23(double coef, std::int64_t n) {
  const std::int64_t f = floor_exact(coef, n);
  const mp::cpp_rational c(coef);
  const mp::cpp_rational fr(f);
  const bool exact = fr * fr * fr == c * c * c * mp::cpp_rational(n) * mp::cpp_rational(n);
  return exact ? f : f + 1;
}

std::int64_t floor_cbrt(std::int64_t n) {
  if (n < 0) throw ParameterError("cube root of a negative count");
  auto r = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t ceil_cbrt(std::int64_t n) {
  const std::int64_t r = floor_cbrt(n);
  return static_cast<__int128>(r) * r * r == n ? r : r + 1;
}

bool lower_bound_size_ok(double delta, std::int64_t n) {
  // n > 200 delta^(-3/5)  <=>  n^5 delta^3 > 200^5
  const mp::cpp_rational d(delta);
  const mp::cpp_rational nn(n);
  const mp::cpp_rational lhs = nn * nn * nn * nn * nn * d * d * d;
  return lhs > mp::cpp_rational(320000000000LL);
}

}  // namespace critgraph
