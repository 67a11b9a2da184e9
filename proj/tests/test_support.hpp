#pragma once

// Independent reference computations for the statistical unit tests. These
// never call into the library's samplers or CDF code.

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdint>
#include <vector>

namespace critgraph::testing {

// Binomial pmf by direct product of the binomial coefficient, k = 0..n.
inline std::vector<double> binomial_pmf(int n, double p) {
  std::vector<double> pmf(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    long double c = 1.0L;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    pmf[static_cast<std::size_t>(k)] =
        static_cast<double>(c * std::pow(static_cast<long double>(p), k) *
                            std::pow(1.0L - p, n - k));
  }
  return pmf;
}

// Binomial pmf via log-gamma, for n too large for the product above.
inline std::vector<double> binomial_pmf_lgamma(std::int64_t n, double p, std::int64_t kmax) {
  std::vector<double> pmf(static_cast<std::size_t>(kmax + 1), 0.0);
  for (std::int64_t k = 0; k <= kmax && k <= n; ++k) {
    const long double l = std::lgamma(static_cast<long double>(n + 1)) -
                          std::lgamma(static_cast<long double>(k + 1)) -
                          std::lgamma(static_cast<long double>(n - k + 1)) +
                          k * std::log(static_cast<long double>(p)) +
                          (n - k) * std::log1p(-static_cast<long double>(p));
    pmf[static_cast<std::size_t>(k)] = static_cast<double>(std::exp(l));
  }
  return pmf;
}

struct ChiSquare {
  double statistic = 0.0;
  double critical = 0.0;
  int dof = 0;
  bool pass() const { return statistic <= critical; }
};

// Pearson chi-square against `probs`; adjacent cells are pooled until each
// expected count is at least 5. Counts beyond probs.size() go to the last cell.
inline ChiSquare chi_square(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs,
                            double alpha) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  std::vector<double> obs, expct;
  double o = 0, e = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    o += k < counts.size() ? static_cast<double>(counts[k]) : 0.0;
    e += probs[k] * static_cast<double>(total);
    if (e >= 5.0) {
      obs.push_back(o);
      expct.push_back(e);
      o = e = 0;
    }
  }
  for (std::size_t k = probs.size(); k < counts.size(); ++k) o += static_cast<double>(counts[k]);
  if (!obs.empty()) {
    obs.back() += o;
    expct.back() += e;
  }
  ChiSquare r;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    r.statistic += (obs[i] - expct[i]) * (obs[i] - expct[i]) / expct[i];
  }
  r.dof = static_cast<int>(obs.size()) - 1;
  r.critical = boost::math::quantile(boost::math::chi_squared(r.dof), 1.0 - alpha);
  return r;
}

inline double standard_error(double p, double m) { return std::sqrt(p * (1 - p) / m); }

}  // namespace critgraph::testing
