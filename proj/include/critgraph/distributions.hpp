#pragma once

#include <cstdint>

#include "critgraph/rng.hpp"

namespace critgraph {

/// Exact Binomial(N, p) sampler for a fixed p, reusable across N.
///
/// Small means (N * min(p, 1-p) <= 30) use sequential inversion from
/// P(0) = exp(N * log1p(-p)), evaluated in log space so that (1-p)^N never
/// underflows; the expected cost is O(1 + Np). This covers the critical
/// regime (Np ~ 1) up to N = 1e9. Larger means use Hormann's BTRS
/// transformed rejection, which is exact. p > 1/2 is reflected.
class BinomialSampler {
 public:
  explicit BinomialSampler(double p);

  std::int64_t operator()(std::int64_t trials, RngStream& rng) const;

  double p() const noexcept { return p_; }

 private:
  std::int64_t inversion(std::int64_t trials, RngStream& rng) const;
  std::int64_t btrs(std::int64_t trials, RngStream& rng) const;

  double p_;
  double small_p_;    // min(p, 1 - p)
  bool reflected_;
  double log_q_;      // log1p(-small_p_)
  double odds_;       // small_p_ / (1 - small_p_)
};

std::int64_t sample_binomial(std::int64_t trials, double p, RngStream& rng);

// Number of Bernoulli(p) trials up to and including the first success.
std::int64_t sample_geometric_gap(double p, RngStream& rng);

bool sample_bernoulli(double p, RngStream& rng);

// Marked items among `draws` taken without replacement from `population`
// items of which `marked` are marked. Cost is O(marked).
std::int64_t sample_hypergeometric(std::int64_t population, std::int64_t marked,
                                   std::int64_t draws, RngStream& rng);

// log(k!) accurate to ~1e-14 relative; thread-safe (no lgamma/signgam).
double log_factorial(std::int64_t k) noexcept;

}  // namespace critgraph
