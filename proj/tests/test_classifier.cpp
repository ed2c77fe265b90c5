#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rank6/classifier.hpp"
#include "rank6/enumerate.hpp"
#include "rank6/exact_rank.hpp"

using namespace rank6;

namespace {

const SeedCatalog& seeds() {
  static const SeedCatalog s = derive_seed_catalog();
  return s;
}

const std::vector<Graph>& hosts() {
  static const std::vector<Graph> h = build_rank6_atlas(seeds()).hosts();
  return h;
}

Classification run(const Graph& g) { return classify(g, seeds(), hosts()); }

ClassificationCertificate certificate(const Graph& g) {
  const Classification c = run(g);
  REQUIRE(std::holds_alternative<ClassificationCertificate>(c));
  return std::get<ClassificationCertificate>(c);
}

Rejection rejection(const Graph& g) {
  const Classification c = run(g);
  REQUIRE(std::holds_alternative<Rejection>(c));
  return std::get<Rejection>(c);
}

bool valid(const Graph& g, const ClassificationCertificate& c) { return validate_certificate(g, c, seeds(), hosts()).valid; }

}  // namespace

TEST_CASE("named inputs") {
  const ClassificationCertificate c6 = certificate(cycle_graph(6));
  CHECK(c6.seed_index == seeds().index_of("A"));
  CHECK(c6.multiplicities == MultiplicityVector::ones(6));
  CHECK(valid(cycle_graph(6), c6));

  const Rejection k33 = rejection(complete_bipartite(3, 3));
  CHECK(k33.reason == RejectReason::rank_too_low);
  CHECK(k33.rank == 2);

  const ClassificationCertificate c8 = certificate(cycle_graph(8));
  CHECK(c8.reduced_graph == cycle_graph(8));
  CHECK(seeds().labels[c8.seed_index] == "D");
  CHECK(valid(cycle_graph(8), c8));

  const Rejection c5 = rejection(cycle_graph(5));
  CHECK(c5.reason == RejectReason::rank_too_low);
  CHECK(c5.rank == 5);

  const Graph blown = multiply_vertices(cycle_graph(6), MultiplicityVector({2, 1, 1, 1, 1, 1}));
  const ClassificationCertificate b = certificate(blown);
  CHECK(b.multiplicities.values() == std::vector<int>{2, 1, 1, 1, 1, 1});
  CHECK(valid(blown, b));
}

TEST_CASE("rejections carry witnesses") {
  const Rejection split = rejection(disjoint_union(cycle_graph(6), path_graph(2)));
  CHECK(split.reason == RejectReason::not_connected);
  CHECK(split.components.size() == 2);

  Graph tri = cycle_graph(6);
  tri.add_edge(0, 2);
  const Rejection t = rejection(tri);
  CHECK(t.reason == RejectReason::has_triangle);
  CHECK(tri.adjacent(t.triangle[0], t.triangle[1]));
  CHECK(tri.adjacent(t.triangle[1], t.triangle[2]));
  CHECK(tri.adjacent(t.triangle[0], t.triangle[2]));

  // P8 has rank 8.
  Graph big = disjoint_union(path_graph(4), path_graph(4));
  big.add_edge(3, 4);
  const Rejection r8 = rejection(big);
  CHECK(r8.reason == RejectReason::rank_too_high);
  CHECK(r8.rank == 8);

  CHECK_THROWS_AS(run(Graph(0)), std::invalid_argument);
  CHECK(to_string(RejectReason::rank_too_high) == "rank-too-high");
}

TEST_CASE("corrupted certificates are invalid") {
  const Graph c6 = cycle_graph(6);
  const ClassificationCertificate good = certificate(c6);

  ClassificationCertificate bad_seed = good;
  std::swap(bad_seed.seed_embedding.map[0], bad_seed.seed_embedding.map[1]);
  CHECK_FALSE(valid(c6, bad_seed));

  ClassificationCertificate bad_host = good;
  bad_host.host_embedding.map[0] = bad_host.host_embedding.map[1];
  CHECK_FALSE(valid(c6, bad_host));

  CHECK_FALSE(valid(cycle_graph(8), good));  // a different input
  const Graph blown = multiply_vertices(c6, MultiplicityVector({1, 1, 2, 1, 1, 1}));
  CHECK_FALSE(valid(blown, good));

  ClassificationCertificate bad_index = good;
  bad_index.host_index = hosts().size();
  CHECK_FALSE(valid(c6, bad_index));
  bad_index = good;
  bad_index.seed_index = 99;
  CHECK_FALSE(valid(c6, bad_index));

  ClassificationCertificate bad_hash = good;
  bad_hash.catalog_hash = "0000000000000000";
  const CertificateCheck check = validate_certificate(c6, bad_hash, seeds(), hosts());
  CHECK_FALSE(check.valid);
  CHECK(check.reasons == std::vector<std::string>{"seed catalog hash mismatch"});

  ClassificationCertificate bad_mult = good;
  bad_mult.multiplicities = MultiplicityVector::ones(5);
  CHECK_FALSE(valid(c6, bad_mult));
}

TEST_CASE("agreement with direct rank over connected triangle-free graphs up to order 9") {
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& g : enumerate_triangle_free(n)) {
      if (!is_connected(g)) continue;
      const Classification c = run(g);
      const bool certified = std::holds_alternative<ClassificationCertificate>(c);
      CHECK(certified == (rank_of(g) == 6));
      if (certified) CHECK(valid(g, std::get<ClassificationCertificate>(c)));
    }
  }
}

TEST_CASE("relabeling does not change the outcome") {
  std::mt19937_64 rng(77);
  int certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_triangle_free(rng, n, 2 * n);
    if (!is_connected(g)) continue;
    const Graph h = g.permuted(oracle::random_permutation(rng, n));
    const Classification a = run(g), b = run(h);
    REQUIRE(a.index() == b.index());
    if (const auto* ca = std::get_if<ClassificationCertificate>(&a)) {
      ++certified;
      CHECK(valid(g, *ca));
      CHECK(valid(h, std::get<ClassificationCertificate>(b)));
      CHECK(valid(h, *ca));  // the blow-up check is up to isomorphism
    } else {
      CHECK(std::get<Rejection>(a).reason == std::get<Rejection>(b).reason);
    }
  }
  CHECK(certified > 0);
}

TEST_CASE("blow-ups of every reduced rank-6 graph are certified") {
  std::mt19937_64 rng(8);
  for (const Graph& g : build_rank6_atlas(seeds()).reduced_connected()) {
    std::vector<int> m(g.order());
    for (int& x : m) x = 1 + static_cast<int>(rng() % 4);
    const Graph blown = multiply_vertices(g, MultiplicityVector(m));
    const ClassificationCertificate c = certificate(blown);
    CHECK(are_isomorphic(c.reduced_graph, g));
    CHECK(c.multiplicities.total() == blown.order());
    CHECK(valid(blown, c));
  }
}
