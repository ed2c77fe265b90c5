#pragma once

#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rank6/graph.hpp"

namespace rank6 {

enum class RankMethod { direct_elimination, pendant_reduction, tree_matching };

std::string_view to_string(RankMethod m);

struct RankReport {
  int rank = 0;
  int nullity = 0;
  int order = 0;
  RankMethod method = RankMethod::direct_elimination;
  std::vector<std::string> trace;
};

/// Rank of A(g) over Q by fraction-free (Bareiss) elimination.
///
/// Pivots are taken as the first nonzero entry of each column, scanning rows in
/// index order. Arithmetic starts in 64-bit integers and is redone in 128-bit
/// and then arbitrary precision if an intermediate overflows.
RankReport adjacency_rank(const Graph& g);

/// Rank only, without building a report. Hot path for enumeration.
int rank_of(const Graph& g);

/// Same elimination over an explicit symmetric-or-not 0/±1 matrix (rows of
/// equal length). Used by tests and by the lemma checks on toggled matrices.
int integer_matrix_rank(const std::vector<std::vector<long long>>& rows);

struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

/// Maximum matching by branch and bound on the lowest uncovered vertex.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

/// Peels pendant vertices (with their neighbors, +2 each) and isolated
/// vertices, then eliminates whatever residue is left.
RankReport pendant_reduced_rank(const Graph& g);

/// Produces every graph of the given order (up to isomorphism).
using GraphSource = std::function<std::vector<Graph>(int order)>;

/// Set of nullities taken by the graphs `source(n)` returns.
std::set<int> bipartite_nullity_set(int n, const GraphSource& source);

}  // namespace rank6
