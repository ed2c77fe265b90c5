#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Graph container.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rank6/graph.hpp"

namespace oracle {

using rank6::Graph;
using Rational = boost::multiprecision::cpp_rational;

// Gauss-Jordan over the rationals, no pivoting strategy beyond "first nonzero".
inline int rational_rank(const std::vector<std::vector<Rational>>& m0) {
  auto m = m0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline int rational_rank(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = g.adjacent(i, j) ? 1 : 0;
  return rational_rank(m);
}

// Upper triangle of g relabeled by perm, packed row-major into one word.
inline std::uint64_t packed(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bits = (bits << 1) | (g.adjacent(inv[i], inv[j]) ? 1 : 0);
  return bits;
}

// Largest packed upper triangle over all n! relabelings (n <= 8).
inline std::uint64_t brute_canonical(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  do best = std::max(best, packed(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return brute_canonical(a) == brute_canonical(b);
}

inline bool brute_triangle_free(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
  return true;
}

inline bool brute_connected(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (g.adjacent(v, w) && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Two-colouring by trying all 2^n colourings (n <= 12).
inline bool brute_bipartite(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t c = 0; c < (1u << n); ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (g.adjacent(a, b) && ((c >> a) & 1) == ((c >> b) & 1)) ok = false;
    if (ok) return true;
  }
  return n == 0;
}

// Largest set of pairwise disjoint edges over all edge subsets.
inline int brute_matching_number(const Graph& g) {
  const auto edges = g.edges();
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> go = [&](std::size_t i, std::uint64_t used, int size) {
    best = std::max(best, size);
    if (i == edges.size() || size + static_cast<int>(edges.size() - i) <= best) return;
    const auto [u, v] = edges[i];
    const std::uint64_t mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    if (!(used & mask)) go(i + 1, used | mask, size + 1);
    go(i + 1, used, size);
  };
  go(0, 0, 0);
  return best;
}

// Every labeled graph on n vertices, filtered, deduplicated by brute
// canonical form. Returns one representative per class (n <= 6).
inline std::vector<Graph> naive_enumerate(int n, const std::function<bool(const Graph&)>& keep) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
    if (!keep(g)) continue;
    if (seen.insert(brute_canonical(g)).second) out.push_back(g);
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Random triangle-free graph: add random edges that close no triangle.
inline Graph random_triangle_free(std::mt19937_64& rng, int n, int attempts) {
  Graph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < attempts; ++t) {
    const int u = pick(rng), v = pick(rng);
    if (u == v || g.adjacent(u, v) || !(g.neighbors(u) & g.neighbors(v)).empty()) continue;
    g.add_edge(u, v);
  }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
