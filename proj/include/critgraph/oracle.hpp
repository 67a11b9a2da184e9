#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critgraph/explore.hpp"
#include "critgraph/params.hpp"
#include "critgraph/rng.hpp"

namespace critgraph {

using Rational = boost::multiprecision::cpp_rational;

struct ExplicitGraph {
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;  // i < j

  // Throws ParameterError on out-of-range indices, i >= j or duplicates.
  void validate() const;
};

// "n m" on the first line, then m lines "i j".
void write_edge_list(std::ostream& os, const ExplicitGraph& g);
ExplicitGraph read_edge_list(std::istream& is);

/// Edge probability for enumeration. When a ratio is given the oracle is
/// evaluated in exact rational arithmetic.
struct EdgeProbability {
  double value = 0.0;
  std::optional<std::pair<std::int64_t, std::int64_t>> ratio;

  static EdgeProbability exact(std::int64_t num, std::int64_t den);
  static EdgeProbability real(double p);
};

struct ExactDistribution {
  std::vector<std::int64_t> support;   // 1..n
  std::vector<long double> probs;
  std::vector<Rational> exact;         // empty unless evaluated rationally

  long double prob(std::int64_t size) const;
  // Probabilities indexed by size, entry 0 unused.
  std::vector<double> by_size() const;
};

struct ExactOracle {
  ExactDistribution cv;  // |C(0)|
  ExactDistribution c1;  // |C1|
};

inline constexpr std::int64_t kMaxEnumerationVertices = 7;

// Graph counts by (edge count, size): cv[e][s] graphs with e edges and
// |C(0)| = s; c1 likewise for the largest component. Independent of p.
struct EnumerationCounts {
  std::int64_t n = 0;
  std::int64_t pairs = 0;
  std::vector<std::vector<std::uint64_t>> cv;
  std::vector<std::vector<std::uint64_t>> c1;
};

EnumerationCounts enumerate_counts(std::int64_t n);

// Exhaustive over all 2^(n(n-1)/2) graphs; refuses n > 7.
ExactOracle enumerate_exact(std::int64_t n, const EdgeProbability& p);

inline constexpr std::int64_t kMaxExplicitVertices = 100'000;
inline constexpr double kMaxExplicitExpectedEdges = 1e8;

// Geometric gap-skipping over lexicographic pairs; O(1 + p n^2) expected.
ExplicitGraph sample_explicit(const GraphParams& params, RngStream& rng);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x) noexcept;
  bool unite(std::size_t a, std::size_t b) noexcept;
  std::size_t size_of(std::size_t x) noexcept { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Sizes ordered by each component's smallest vertex.
SweepResult components_of(const ExplicitGraph& g);

/// Literal vertex-level exploration from v: active vertices form a FIFO
/// queue, neutral neighbours of the first active vertex are activated in
/// index order. Component size does not depend on this order; the trace
/// shape does.
ComponentRun explore_on_graph(const ExplicitGraph& g, std::int64_t v);

// 0.5 * sum |a_i - b_i| over the longer of the two vectors.
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace critgraph
