#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rank6/enumerate.hpp"
#include "rank6/exact_rank.hpp"

using namespace rank6;

namespace {

Graph star(int leaves) { return complete_bipartite(1, leaves); }

}  // namespace

TEST_CASE("ranks of named graphs") {
  CHECK(adjacency_rank(cycle_graph(4)).rank == 2);
  CHECK(adjacency_rank(cycle_graph(5)).rank == 5);
  CHECK(adjacency_rank(complete_bipartite(3, 3)).rank == 2);
  CHECK(adjacency_rank(Graph(7)).rank == 0);
  CHECK(adjacency_rank(cycle_graph(8)).rank == 6);
  CHECK(oracle::rational_rank(cycle_graph(8)) == 6);
  CHECK(adjacency_rank(Graph(0)).rank == 0);
}

TEST_CASE("rank report fields") {
  const RankReport r = adjacency_rank(path_graph(5));
  CHECK(r.order == 5);
  CHECK(r.rank == 4);
  CHECK(r.nullity == 1);
  CHECK(r.method == RankMethod::direct_elimination);
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].find("pivot columns [0,1,2,3]") != std::string::npos);
}

TEST_CASE("matching numbers") {
  CHECK(matching_number(path_graph(6)) == 3);
  CHECK(matching_number(cycle_graph(5)) == 2);
  CHECK(matching_number(Graph(4)) == 0);
  const Matching m = maximum_matching(cycle_graph(6));
  CHECK(m.size() == 3);
  VertexSet covered;
  for (auto [u, v] : m.edges) {
    CHECK(cycle_graph(6).adjacent(u, v));
    CHECK_FALSE(covered.contains(u));
    CHECK_FALSE(covered.contains(v));
    covered.insert(u);
    covered.insert(v);
  }
}

TEST_CASE("pendant reduction") {
  const RankReport p6 = pendant_reduced_rank(path_graph(6));
  CHECK(p6.rank == 6);
  CHECK(p6.method == RankMethod::tree_matching);
  CHECK(p6.trace.size() == 3);

  const RankReport c6 = pendant_reduced_rank(cycle_graph(6));
  CHECK(c6.rank == 6);
  CHECK(c6.method == RankMethod::direct_elimination);

  const RankReport k14 = pendant_reduced_rank(star(4));
  CHECK(k14.rank == 2);
  CHECK(k14.method == RankMethod::tree_matching);

  // One peel removes the P2, leaving a pendant-free C5.
  const Graph tail = disjoint_union(cycle_graph(5), path_graph(2));
  const RankReport t = pendant_reduced_rank(tail);
  CHECK(t.rank == oracle::rational_rank(tail));
  CHECK(t.method == RankMethod::pendant_reduction);
}

TEST_CASE("integer matrix rank handles non-adjacency matrices") {
  CHECK(integer_matrix_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(integer_matrix_rank({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}) == 2);
  CHECK(integer_matrix_rank({}) == 0);
  // Entries large enough that 64-bit Bareiss products overflow.
  const long long big = 3'000'000'000LL;
  CHECK(integer_matrix_rank({{big, 1, 0}, {1, big, 1}, {0, 1, big}}) == 3);
  CHECK(integer_matrix_rank({{big, big}, {big, big}}) == 1);
}

TEST_CASE("nullity sets of bipartite graphs") {
  CHECK(bipartite_nullity_set(2, enumerate_bipartite) == std::set<int>{0, 2});
  CHECK(bipartite_nullity_set(3, enumerate_bipartite) == std::set<int>{1, 3});
  CHECK(bipartite_nullity_set(6, enumerate_bipartite) == std::set<int>{0, 2, 4, 6});
  const GraphSource failing = [](int) -> std::vector<Graph> { throw std::runtime_error("source failed"); };
  CHECK_THROWS_AS(bipartite_nullity_set(4, failing), std::runtime_error);
}

TEST_CASE("random graphs: rank agrees with the rational oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng() % 15);
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * (trial % 5) / 4.0);
    const RankReport r = adjacency_rank(g);
    CHECK(r.rank == oracle::rational_rank(g));
    CHECK(r.rank + r.nullity == n);
    CHECK(pendant_reduced_rank(g).rank == r.rank);
    const Graph h = g.permuted(oracle::random_permutation(rng, n));
    CHECK(rank_of(h) == r.rank);
  }
}

TEST_CASE("random graphs: matching agrees with brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.35);
    CHECK(matching_number(g) == oracle::brute_matching_number(g));
  }
}

TEST_CASE("rank never drops when a vertex is added") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      const int r = rank_of(g);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Graph h = g;
        h.add_vertex(VertexSet(bits));
        CHECK(rank_of(h) >= r);
      }
    }
  }
}

TEST_CASE("large orders") {
  CHECK(rank_of(cycle_graph(64)) == 62);
  CHECK(rank_of(path_graph(64)) == 64);
  CHECK(rank_of(complete_graph(64)) == 64);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = oracle::random_graph(rng, 40, 0.5);
    CHECK(rank_of(g) == oracle::rational_rank(g));
  }
}
