#include "critgraph/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "critgraph/params.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

namespace {

using real = long double;

BoundReport make_report(std::string name, real raw, std::vector<BoundCondition> conditions) {
  BoundReport r;
  r.name = std::move(name);
  r.raw_value = static_cast<double>(raw);
  r.value = static_cast<double>(std::clamp(raw, 0.0L, 1.0L));
  r.conditions = std::move(conditions);
  r.valid = std::all_of(r.conditions.begin(), r.conditions.end(),
                        [](const BoundCondition& c) { return c.satisfied; });
  return r;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ParameterError(std::string(what) + " must be positive and finite");
  }
}

real n_pow(std::int64_t n, real e) { return std::pow(static_cast<real>(n), e); }

// Smaller of the valid candidates; falls back to the first when none is valid.
BoundReport best_of(std::vector<BoundReport> candidates) {
  const BoundReport* best = nullptr;
  for (const auto& c : candidates) {
    if (c.valid && (best == nullptr || c.raw_value < best->raw_value)) best = &c;
  }
  return best != nullptr ? *best : candidates.front();
}

}  // namespace

BoundReport easy_bound_c1(double A) {
  require_positive(A, "A");
  const real a = A;
  return make_report("easy_c1", 6.0L / (a * std::sqrt(a)), {{"A > 1", A > 1.0}});
}

BoundReport easy_bound_cv(std::int64_t T, std::int64_t n) {
  if (T < 1 || n < 1) throw ParameterError("easy per-vertex bound needs T, n >= 1");
  const real raw = 3.0L / std::sqrt(static_cast<real>(T));
  const __int128 upper = static_cast<__int128>(n - 3) * (n - 3);
  return make_report("easy_cv", raw, {{"T >= 9", T >= 9}, {"T <= (n-3)^2", n > 3 && T <= upper}});
}

BoundPair exp_tail_bounds(double A, std::int64_t n) {
  require_positive(A, "A");
  if (n < 1) throw ParameterError("vertex count must be positive");
  const real a = A;
  const real exponent = -a * a * (a - 4.0L) / 32.0L;
  const std::vector<BoundCondition> cond{{"n > 1000", n > 1000}, {"A > 8", A > 8.0}};
  BoundPair out;
  out.per_vertex = make_report("exp_tail_cv", 4.0L * n_pow(n, -1.0L / 3.0L) * std::exp(exponent), cond);
  out.largest = make_report("exp_tail_c1", 4.0L / a * std::exp(exponent), cond);
  return out;
}

BoundReport lower_tail_bound(double delta, std::int64_t n) {
  require_positive(delta, "delta");
  if (n < 1) throw ParameterError("vertex count must be positive");
  const real d = delta;
  const real raw = 15.0L * std::pow(d, 0.6L);
  const bool size_ok = lower_bound_size_ok(delta, n);
  return make_report("lower_tail_c1", raw,
                     {{"0 < delta < 1/10", delta < 0.1},
                      {"n > 200/delta^(3/5) (needs n > " + num(static_cast<double>(200.0L / std::pow(d, 0.6L))) + ")",
                       size_ok}});
}

BoundPair window_tail_bounds(double A, double lambda, std::int64_t n) {
  require_positive(A, "A");
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    throw ParameterError("lambda = 0 is the critical case; use exp_tail_bounds");
  }
  if (n < 1) throw ParameterError("vertex count must be positive");
  const real a = A;
  const real l = lambda;
  const real core = (a - 1.0L) * (a - 1.0L) / 2.0L - (a - 1.0L) * l - 2.0L;
  const real tail = std::exp(-core * core / (4.0L * a));
  const real n13 = n_pow(n, -1.0L / 3.0L);

  std::vector<BoundCondition> cond;
  real pre_cv = 0;
  real pre_c1 = 0;
  if (lambda > 0) {
    const real g = 4.0L * l / (1.0L - std::exp(-4.0L * l));
    pre_cv = g + 16.0L;
    pre_c1 = g / a + 16.0L / a;
    cond.push_back({"A > 2*lambda + 3", a > 2.0L * l + 3.0L});
  } else {
    const real g = -2.0L * l / (std::exp(-l) - 1.0L);
    const real m = std::min(5.0L, -1.0L / l);
    pre_cv = g + m;
    pre_c1 = g / a + m;
    cond.push_back({"A > 3", A > 3.0});
  }
  BoundPair out;
  out.per_vertex = make_report("window_cv", pre_cv * n13 * tail, cond);
  out.largest = make_report("window_c1", pre_c1 * tail, cond);
  for (BoundReport* r : {&out.per_vertex, &out.largest}) {
    r->advisories.push_back("asymptotic-validity: unquantified (n large enough)");
  }
  return out;
}

BoundReport c1_upper_bound(double A, std::int64_t n) {
  BoundReport best = best_of({easy_bound_c1(A), exp_tail_bounds(A, n).largest});
  best.name = "min(easy_c1,exp_tail_c1)->" + best.name;
  return best;
}

BoundReport cv_upper_bound(double A, std::int64_t n) {
  const std::int64_t T = std::max<std::int64_t>(1, floor_coef_n23(A, n));
  BoundReport best = best_of({exp_tail_bounds(A, n).per_vertex, easy_bound_cv(T, n)});
  best.name = "min(easy_cv,exp_tail_cv)->" + best.name;
  return best;
}

BoundPair two_stage_bounds(std::int64_t h, std::int64_t t2, std::int64_t n) {
  if (h < 1 || t2 < 1 || n < 1) throw ParameterError("two-stage bounds need h, T2, n >= 1");
  const real hh = static_cast<real>(h);
  const real stage1 = 32.0L * hh * hh * hh / static_cast<real>(n);
  const real stage2 = stage1 + 2.0L * static_cast<real>(t2) / (hh * hh);
  const std::vector<BoundCondition> cond{
      {"h >= 3", h >= 3},
      {"h < sqrt(n)/4", 16 * static_cast<__int128>(h) * h < n},
      {"T2 <= n/(8h)", 8 * static_cast<__int128>(h) * t2 <= n}};
  BoundPair out;
  out.per_vertex = make_report("stage1_failure", stage1, cond);
  out.largest = make_report("tau0_below_T2", stage2, cond);
  return out;
}

BoundReport walk_hit_bound(std::int64_t H) {
  if (H < 1) throw ParameterError("barrier must be >= 1");
  return make_report("walk_hit_top", 1.0L / static_cast<real>(H), {{"H >= 1", true}});
}

double walk_mean_gamma_bound(std::int64_t H) {
  if (H < 1) throw ParameterError("barrier must be >= 1");
  return static_cast<double>(H) + 3.0;
}

BoundReport walk_capped_positive_bound(std::int64_t H) {
  if (H < 1) throw ParameterError("barrier must be >= 1");
  return make_report("walk_capped_positive", 3.0L / static_cast<real>(H), {{"H >= 2", H >= 2}});
}

BoundReport drift_walk_hit_bound(double lambda, std::int64_t n) {
  if (lambda == 0.0) throw ParameterError("drift walk bound needs lambda != 0");
  if (n < 1) throw ParameterError("vertex count must be positive");
  const real l = lambda;
  const real n13 = n_pow(n, -1.0L / 3.0L);
  const real raw = lambda > 0 ? 4.0L * l * n13 / (1.0L - std::exp(-4.0L * l))
                              : -2.0L * l * n13 / (std::exp(-l) - 1.0L);
  BoundReport r = make_report(lambda > 0 ? "drift_hit_top_pos" : "drift_hit_top_neg", raw, {});
  r.advisories.push_back("asymptotic-validity: unquantified (n large enough)");
  return r;
}

double drift_walk_mean_gamma_bound(double lambda, std::int64_t n) {
  if (lambda == 0.0) throw ParameterError("drift walk bound needs lambda != 0");
  const real n13 = n_pow(n, 1.0L / 3.0L);
  const real factor = lambda > 0 ? 16.0L : std::min(5.0L, -1.0L / static_cast<real>(lambda));
  return static_cast<double>(factor * n13);
}

std::string format_conditions(const BoundReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.conditions.size(); ++i) {
    if (i) os << "; ";
    os << report.conditions[i].text << (report.conditions[i].satisfied ? " [ok]" : " [FAILS]");
  }
  for (const auto& a : report.advisories) os << (os.tellp() > 0 ? "; " : "") << a;
  return os.str();
}

}  // namespace critgraph
