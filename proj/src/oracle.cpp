#include "critgraph/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

#include "critgraph/distributions.hpp"

namespace critgraph {

void ExplicitGraph::validate() const {
  if (n < 0) throw ParameterError("graph vertex count must be nonnegative");
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& [i, j] : edges) {
    if (i < 0 || j >= n || i >= j) throw ParameterError("edge indices must satisfy 0 <= i < j < n");
    if (!seen.insert({i, j}).second) throw ParameterError("duplicate edge");
  }
}

void write_edge_list(std::ostream& os, const ExplicitGraph& g) {
  os << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [i, j] : g.edges) os << i << ' ' << j << '\n';
}

ExplicitGraph read_edge_list(std::istream& is) {
  ExplicitGraph g;
  std::int64_t m = 0;
  if (!(is >> g.n >> m) || m < 0) throw std::runtime_error("edge list: bad header");
  g.edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    std::int64_t i = 0, j = 0;
    if (!(is >> i >> j)) throw std::runtime_error("edge list: truncated at edge " + std::to_string(k));
    g.edges.emplace_back(i, j);
  }
  g.validate();
  return g;
}

EdgeProbability EdgeProbability::exact(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) throw ParameterError("edge probability ratio must lie in [0,1]");
  return {static_cast<double>(num) / static_cast<double>(den), std::make_pair(num, den)};
}

EdgeProbability EdgeProbability::real(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge probability must lie in [0,1]");
  return {p, std::nullopt};
}

long double ExactDistribution::prob(std::int64_t size) const {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] == size) return probs[i];
  }
  return 0.0L;
}

std::vector<double> ExactDistribution::by_size() const {
  const std::int64_t top = support.empty() ? 0 : support.back();
  std::vector<double> out(static_cast<std::size_t>(top + 1), 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    out[static_cast<std::size_t>(support[i])] = static_cast<double>(probs[i]);
  }
  return out;
}

EnumerationCounts enumerate_counts(std::int64_t n) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw ParameterError("exact enumeration supports 1 <= n <= 7");
  }
  const int nv = static_cast<int>(n);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());

  EnumerationCounts out;
  out.n = n;
  out.pairs = m;
  const std::size_t width = static_cast<std::size_t>(n + 1);
  out.cv.assign(static_cast<std::size_t>(m + 1), std::vector<std::uint64_t>(width, 0));
  out.c1 = out.cv;

  const std::int64_t total = std::int64_t{1} << m;
#pragma omp parallel
  {
    auto cv = out.cv;
    auto c1 = out.c1;
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      std::array<std::uint32_t, kMaxEnumerationVertices> adj{};
      for (int k = 0; k < m; ++k) {
        if (mask >> k & 1) {
          adj[pairs[k].first] |= 1u << pairs[k].second;
          adj[pairs[k].second] |= 1u << pairs[k].first;
        }
      }
      std::uint32_t unseen = (1u << nv) - 1;
      int largest = 0;
      int size0 = 0;
      while (unseen) {
        const int start = std::countr_zero(unseen);
        std::uint32_t comp = 1u << start;
        std::uint32_t frontier = comp;
        while (frontier) {
          const int u = std::countr_zero(frontier);
          frontier &= frontier - 1;
          const std::uint32_t fresh = adj[u] & ~comp;
          comp |= fresh;
          frontier |= fresh;
        }
        unseen &= ~comp;
        const int size = std::popcount(comp);
        if (comp & 1u) size0 = size;
        largest = std::max(largest, size);
      }
      const auto e = static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(mask)));
      ++cv[e][static_cast<std::size_t>(size0)];
      ++c1[e][static_cast<std::size_t>(largest)];
    }
#pragma omp critical
    for (std::size_t e = 0; e < cv.size(); ++e) {
      for (std::size_t s = 0; s < width; ++s) {
        out.cv[e][s] += cv[e][s];
        out.c1[e][s] += c1[e][s];
      }
    }
  }
  return out;
}

namespace {

ExactDistribution weigh(const std::vector<std::vector<std::uint64_t>>& counts, std::int64_t n,
                        std::int64_t m, const EdgeProbability& p) {
  ExactDistribution d;
  for (std::int64_t s = 1; s <= n; ++s) d.support.push_back(s);
  d.probs.assign(static_cast<std::size_t>(n), 0.0L);
  if (p.ratio) {
    const auto [num, den] = *p.ratio;
    d.exact.assign(static_cast<std::size_t>(n), Rational(0));
    namespace mp = boost::multiprecision;
    const mp::cpp_int scale = mp::pow(mp::cpp_int(den), static_cast<unsigned>(m));
    for (std::int64_t e = 0; e <= m; ++e) {
      const Rational w(mp::pow(mp::cpp_int(num), static_cast<unsigned>(e)) *
                           mp::pow(mp::cpp_int(den - num), static_cast<unsigned>(m - e)),
                       scale);
      for (std::int64_t s = 1; s <= n; ++s) {
        const std::uint64_t c = counts[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)];
        if (c) d.exact[static_cast<std::size_t>(s - 1)] += w * Rational(c);
      }
    }
    for (std::size_t i = 0; i < d.exact.size(); ++i) {
      d.probs[i] = static_cast<long double>(d.exact[i]);
    }
    return d;
  }
  const long double pv = p.value;
  for (std::int64_t e = 0; e <= m; ++e) {
    const long double w = std::pow(pv, static_cast<long double>(e)) *
                          std::pow(1.0L - pv, static_cast<long double>(m - e));
    for (std::int64_t s = 1; s <= n; ++s) {
      const std::uint64_t c = counts[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)];
      d.probs[static_cast<std::size_t>(s - 1)] += w * static_cast<long double>(c);
    }
  }
  return d;
}

}  // namespace

ExactOracle enumerate_exact(std::int64_t n, const EdgeProbability& p) {
  const EnumerationCounts counts = enumerate_counts(n);
  return {weigh(counts.cv, n, counts.pairs, p), weigh(counts.c1, n, counts.pairs, p)};
}

ExplicitGraph sample_explicit(const GraphParams& params, RngStream& rng) {
  params.validate();
  const std::int64_t n = params.n;
  const std::int64_t pairs = n * (n - 1) / 2;
  if (n > kMaxExplicitVertices || params.p * static_cast<double>(pairs) > kMaxExplicitExpectedEdges) {
    throw ParameterError("explicit graph exceeds the size guard (" +
                         std::to_string(kMaxExplicitVertices) + " vertices, 1e8 expected edges)");
  }
  ExplicitGraph g;
  g.n = n;
  if (params.p == 0.0 || pairs == 0) return g;
  g.edges.reserve(static_cast<std::size_t>(params.p * static_cast<double>(pairs) * 1.1) + 16);

  std::int64_t k = -1;
  std::int64_t row = 0;
  std::int64_t row_start = 0;  // index of pair (row, row + 1)
  for (;;) {
    const std::int64_t gap = sample_geometric_gap(params.p, rng);
    if (gap >= pairs - k) break;
    k += gap;
    while (k >= row_start + (n - 1 - row)) {
      row_start += n - 1 - row;
      ++row;
    }
    g.edges.emplace_back(row, row + 1 + (k - row_start));
  }
  return g;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) noexcept {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(std::size_t a, std::size_t b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

SweepResult components_of(const ExplicitGraph& g) {
  const auto n = static_cast<std::size_t>(g.n);
  UnionFind uf(n);
  for (const auto& [i, j] : g.edges) uf.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  SweepResult out;
  std::vector<bool> counted(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = uf.find(v);
    if (counted[r]) continue;
    counted[r] = true;
    const auto s = static_cast<std::int64_t>(uf.size_of(r));
    out.sizes.push_back(s);
    if (s > out.largest) {
      out.second_largest = out.largest;
      out.largest = s;
    } else if (s > out.second_largest) {
      out.second_largest = s;
    }
  }
  return out;
}

ComponentRun explore_on_graph(const ExplicitGraph& g, std::int64_t v) {
  if (v < 0 || v >= g.n) throw ParameterError("start vertex out of range");
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [i, j] : g.edges) {
    adj[static_cast<std::size_t>(i)].push_back(static_cast<std::size_t>(j));
    adj[static_cast<std::size_t>(j)].push_back(static_cast<std::size_t>(i));
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  enum class State : unsigned char { neutral, active, explored };
  std::vector<State> state(n, State::neutral);
  std::deque<std::size_t> active{static_cast<std::size_t>(v)};
  state[static_cast<std::size_t>(v)] = State::active;

  ComponentRun run;
  while (!active.empty()) {
    const std::size_t w = active.front();
    active.pop_front();
    for (const std::size_t u : adj[w]) {
      if (state[u] == State::neutral) {
        state[u] = State::active;
        active.push_back(u);
      }
    }
    state[w] = State::explored;
    ++run.size;
    run.trace.push_back(static_cast<std::int64_t>(active.size()));
  }
  return run;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    sum += std::fabs(x - y);
  }
  return 0.5 * sum;
}

}  // namespace critgraph
