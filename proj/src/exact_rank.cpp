#include "rank6/exact_rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rank6 {

std::string_view to_string(RankMethod m) {
  switch (m) {
    case RankMethod::direct_elimination: return "direct-elimination";
    case RankMethod::pendant_reduction: return "pendant-reduction";
    case RankMethod::tree_matching: return "tree-matching";
  }
  return "unknown";
}

namespace {

struct Overflow {};

template <class T>
T mul(T a, T b) {
  if constexpr (std::is_same_v<T, boost::multiprecision::cpp_int>) {
    return a * b;
  } else {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
}

template <class T>
T sub(T a, T b) {
  if constexpr (std::is_same_v<T, boost::multiprecision::cpp_int>) {
    return a - b;
  } else {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
}

// Bareiss elimination to row echelon form; columns without a pivot among the
// remaining rows are skipped. Every division is exact (Sylvester's identity);
// a nonzero remainder means a bug, not bad input.
template <class T>
int bareiss_rank(std::vector<std::vector<T>> a, std::vector<int>* pivot_cols) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rank = 0;
  T prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const T& pivot = a[rank][c];
    for (int i = rank + 1; i < rows; ++i) {
      const T lead = a[i][c];
      for (int j = c + 1; j < cols; ++j) {
        const T num = sub(mul(pivot, a[i][j]), mul(lead, a[rank][j]));
        if (num % prev != 0) throw std::logic_error("inexact Bareiss division");
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = pivot;
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return rank;
}

template <class T>
std::vector<std::vector<T>> convert(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<T>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

int escalating_rank(const std::vector<std::vector<long long>>& rows, std::vector<int>* pivot_cols) {
  try {
    return bareiss_rank<long long>(rows, pivot_cols);
  } catch (const Overflow&) {
  }
  if (pivot_cols) pivot_cols->clear();
  try {
    return bareiss_rank<__int128>(convert<__int128>(rows), pivot_cols);
  } catch (const Overflow&) {
  }
  if (pivot_cols) pivot_cols->clear();
  return bareiss_rank<boost::multiprecision::cpp_int>(convert<boost::multiprecision::cpp_int>(rows),
                                                      pivot_cols);
}

std::vector<std::vector<long long>> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) a[u][v] = 1;
  }
  return a;
}

}  // namespace

int integer_matrix_rank(const std::vector<std::vector<long long>>& rows) {
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
  }
  return escalating_rank(rows, nullptr);
}

int rank_of(const Graph& g) { return escalating_rank(adjacency_matrix(g), nullptr); }

RankReport adjacency_rank(const Graph& g) {
  std::vector<int> pivots;
  RankReport r;
  r.order = g.order();
  r.rank = escalating_rank(adjacency_matrix(g), &pivots);
  r.nullity = r.order - r.rank;
  r.method = RankMethod::direct_elimination;
  std::string line = "eliminate " + std::to_string(r.order) + "x" + std::to_string(r.order) +
                     " adjacency matrix, pivot columns [";
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (i) line += ",";
    line += std::to_string(pivots[i]);
  }
  r.trace.push_back(line + "]");
  return r;
}

namespace {

struct MatchingSearch {
  const Graph& g;
  std::vector<Edge> current, best;

  void run(VertexSet left) {
    if (static_cast<int>(current.size()) + left.size() / 2 <= static_cast<int>(best.size())) return;
    // Vertices with no neighbor left cannot be matched any more.
    while (!left.empty() && (g.neighbors(left.first()) & left).empty()) left.erase(left.first());
    if (left.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    const int v = left.first();
    left.erase(v);
    for (int u : g.neighbors(v) & left) {
      current.emplace_back(v, u);
      VertexSet rest = left;
      rest.erase(u);
      run(rest);
      current.pop_back();
    }
    run(left);
  }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  MatchingSearch search{g, {}, {}};
  search.run(g.vertices());
  return Matching{std::move(search.best)};
}

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

RankReport pendant_reduced_rank(const Graph& g) {
  RankReport r;
  r.order = g.order();
  VertexSet alive = g.vertices();
  int pendant_steps = 0;
  for (;;) {
    for (int v : alive) {
      if ((g.neighbors(v) & alive).empty()) {
        alive.erase(v);
        r.trace.push_back("drop isolated vertex " + std::to_string(v));
      }
    }
    int pendant = -1;
    for (int v : alive) {
      if ((g.neighbors(v) & alive).size() == 1) {
        pendant = v;
        break;
      }
    }
    if (pendant < 0) break;
    const int quasi = (g.neighbors(pendant) & alive).first();
    alive.erase(pendant);
    alive.erase(quasi);
    r.rank += 2;
    ++pendant_steps;
    r.trace.push_back("delete pendant " + std::to_string(pendant) + " and neighbor " +
                      std::to_string(quasi) + ": rank +2");
  }
  if (alive.empty()) {
    r.method = RankMethod::tree_matching;
  } else {
    const int residue = rank_of(induced_subgraph(g, alive));
    r.rank += residue;
    r.method = pendant_steps > 0 ? RankMethod::pendant_reduction : RankMethod::direct_elimination;
    r.trace.push_back("eliminate residue on " + std::to_string(alive.size()) + " vertices: rank " +
                      std::to_string(residue));
  }
  r.nullity = r.order - r.rank;
  return r;
}

std::set<int> bipartite_nullity_set(int n, const GraphSource& source) {
  std::set<int> out;
  for (const Graph& g : source(n)) {
    if (g.order() != n) throw std::invalid_argument("graph source returned a graph of the wrong order");
    if (!is_bipartite(g)) throw std::invalid_argument("graph source returned a non-bipartite graph");
    out.insert(n - rank_of(g));
  }
  return out;
}

}  // namespace rank6
