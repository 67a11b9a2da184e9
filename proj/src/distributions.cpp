#include "critgraph/distributions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace critgraph {

namespace {

constexpr double kInversionMeanLimit = 30.0;

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("probability must lie in [0,1], got " + std::to_string(p));
  }
}

constexpr std::array<double, 16> kLogFactorialTable = {
    0.0,
    0.0,
    0.69314718055994530942,
    1.79175946922805500081,
    3.17805383034794561964,
    4.78749174278204599425,
    6.57925121201010099506,
    8.52516136106541430017,
    10.60460290274525022842,
    12.80182748008146961121,
    15.10441257307551529523,
    17.50230784587388583929,
    19.98721449566188614952,
    22.55216385312342288557,
    25.19122118273868150009,
    27.89927138384089156609,
};

}  // namespace

double log_factorial(std::int64_t k) noexcept {
  if (k < static_cast<std::int64_t>(kLogFactorialTable.size())) {
    return kLogFactorialTable[static_cast<std::size_t>(k)];
  }
  // Stirling series for log Gamma(x), x = k + 1.
  const double x = static_cast<double>(k) + 1.0;
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
  return (x - 0.5) * std::log(x) - x + 0.91893853320467274178 + series;
}

BinomialSampler::BinomialSampler(double p) : p_(p) {
  check_probability(p);
  reflected_ = p > 0.5;
  small_p_ = reflected_ ? 1.0 - p : p;
  log_q_ = std::log1p(-small_p_);
  odds_ = small_p_ / (1.0 - small_p_);
}

std::int64_t BinomialSampler::operator()(std::int64_t trials, RngStream& rng) const {
  if (trials < 0) throw ParameterError("binomial trial count must be nonnegative");
  if (trials == 0 || small_p_ == 0.0) return reflected_ ? trials : 0;
  const double mean = static_cast<double>(trials) * small_p_;
  const std::int64_t k = mean <= kInversionMeanLimit ? inversion(trials, rng) : btrs(trials, rng);
  return reflected_ ? trials - k : k;
}

std::int64_t BinomialSampler::inversion(std::int64_t trials, RngStream& rng) const {
  const double p0 = std::exp(static_cast<double>(trials) * log_q_);
  for (;;) {
    double u = rng.uniform();
    double f = p0;
    std::int64_t k = 0;
    while (u >= f) {
      u -= f;
      ++k;
      if (k > trials) break;  // accumulated round-off; redraw
      f *= odds_ * static_cast<double>(trials - k + 1) / static_cast<double>(k);
    }
    if (k <= trials) return k;
  }
}

// Hormann (1993), "The generation of binomial random variates", algorithm BTRS.
std::int64_t BinomialSampler::btrs(std::int64_t trials, RngStream& rng) const {
  const double n = static_cast<double>(trials);
  const double p = small_p_;
  const double spq = std::sqrt(n * p * (1.0 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = n * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double lpq = std::log(odds_);
  const auto m = static_cast<std::int64_t>(std::floor((n + 1.0) * p));
  const double h = log_factorial(m) + log_factorial(trials - m);

  for (;;) {
    const double u = rng.uniform() - 0.5;
    double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + c);
    if (kf < 0.0 || kf > n) continue;
    const auto k = static_cast<std::int64_t>(kf);
    if (us >= 0.07 && v <= v_r) return k;
    if (v == 0.0) continue;
    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound = h - log_factorial(k) - log_factorial(trials - k) +
                         static_cast<double>(k - m) * lpq;
    if (v <= bound) return k;
  }
}

std::int64_t sample_binomial(std::int64_t trials, double p, RngStream& rng) {
  return BinomialSampler(p)(trials, rng);
}

std::int64_t sample_geometric_gap(double p, RngStream& rng) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ParameterError("geometric gap needs p in (0,1], got " + std::to_string(p));
  }
  if (p == 1.0) return 1;
  const double g = std::floor(std::log(rng.uniform_pos()) / std::log1p(-p));
  constexpr double kMax = static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2);
  return g >= kMax ? std::numeric_limits<std::int64_t>::max() / 2
                   : static_cast<std::int64_t>(g) + 1;
}

bool sample_bernoulli(double p, RngStream& rng) {
  check_probability(p);
  return rng.uniform() < p;
}

std::int64_t sample_hypergeometric(std::int64_t population, std::int64_t marked,
                                   std::int64_t draws, RngStream& rng) {
  if (population < 0 || marked < 0 || draws < 0 || marked > population || draws > population) {
    throw ParameterError("hypergeometric parameters out of range");
  }
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < marked && hits < draws; ++i) {
    const double chosen = static_cast<double>(draws - hits) / static_cast<double>(population - i);
    if (rng.uniform() < chosen) ++hits;
  }
  return hits;
}

}  // namespace critgraph
