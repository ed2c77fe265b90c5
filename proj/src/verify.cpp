#include "rank6/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "rank6/canonical.hpp"
#include "rank6/enumerate.hpp"
#include "rank6/exact_rank.hpp"
#include "rank6/graph6.hpp"
#include "rank6/transform.hpp"

namespace rank6 {

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

template <class Fn>
void for_each_subset(int n, Fn&& fn) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < limit; ++bits) fn(VertexSet(bits));
}

std::string with_detail(const Graph& g, const std::string& detail) { return write_graph6(g) + " " + detail; }

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

// Trees have rank twice their matching number.
CheckResult tree_rank_is_twice_matching(const VerifyContext&) {
  CheckResult r;
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      ++r.instances;
      const int rank = rank_of(t), mu = matching_number(t);
      if (rank != 2 * mu) r.fail(with_detail(t, "rank " + std::to_string(rank) + " mu " + std::to_string(mu)));
    }
  }
  return r;
}

// Deleting a pendant vertex and its neighbor lowers rank by 2.
CheckResult pendant_deletion(const VerifyContext&) {
  CheckResult r;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      const int rank = rank_of(g);
      for (int p = 0; p < n; ++p) {
        if (g.degree(p) != 1) continue;
        ++r.instances;
        VertexSet keep = g.vertices();
        keep.erase(p);
        keep.erase(g.neighbors(p).first());
        if (rank != rank_of(induced_subgraph(g, keep)) + 2) r.fail(with_detail(g, "pendant " + std::to_string(p)));
      }
    }
  }
  return r;
}

// Nullities of bipartite graphs of order n are n-2k.
CheckResult bipartite_nullity(const VerifyContext&) {
  CheckResult r;
  for (int n = 1; n <= 8; ++n) {
    ++r.instances;
    std::set<int> expected;
    for (int k = 0; k <= n / 2; ++k) expected.insert(n - 2 * k);
    const std::set<int> got = bipartite_nullity_set(n, enumerate_bipartite);
    if (got != expected) r.fail("order " + std::to_string(n));
  }
  return r;
}

// Shared driver for the two neighborhood checks: reduced G, induced H with r(H) = r(G).
template <class Fn>
void for_each_equal_rank_induced(int max_order, Fn&& fn) {
  for (int n = 1; n <= max_order; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      if (!is_reduced(g)) continue;
      const int rank = rank_of(g);
      for_each_subset(n, [&](VertexSet h) {
        if (h == g.vertices() || h.size() < rank) return;
        if (rank_of(induced_subgraph(g, h)) == rank) fn(g, h);
      });
    }
  }
}

CheckResult outside_nonadjacent_distinct(const VerifyContext&) {
  CheckResult r;
  for_each_equal_rank_induced(7, [&](const Graph& g, VertexSet h) {
    const VertexSet out = g.vertices() - h;
    for (int u : out) {
      for (int v : out) {
        if (v <= u || g.adjacent(u, v)) continue;
        ++r.instances;
        if ((g.neighbors(u) & h) == (g.neighbors(v) & h)) {
          r.fail(with_detail(g, "H=" + set_text(h) + " u=" + std::to_string(u) + " v=" + std::to_string(v)));
        }
      }
    }
  });
  return r;
}

CheckResult outside_differs_from_inside(const VerifyContext&) {
  CheckResult r;
  for_each_equal_rank_induced(7, [&](const Graph& g, VertexSet h) {
    for (int v : g.vertices() - h) {
      for (int u : h) {
        ++r.instances;
        if ((g.neighbors(v) & h) == (g.neighbors(u) & h)) {
          r.fail(with_detail(g, "H=" + set_text(h) + " v=" + std::to_string(v) + " u=" + std::to_string(u)));
        }
      }
    }
  });
  return r;
}

// Near-full-rank induced subgraphs dominate a connected graph.
CheckResult near_full_rank_dominates(const VerifyContext&) {
  CheckResult r;
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      if (!is_connected(g)) continue;
      const int rank = rank_of(g);
      for_each_subset(n, [&](VertexSet h) {
        if (h.empty() || h == g.vertices() || rank_of(induced_subgraph(g, h)) < rank - 1) return;
        for (int v : g.vertices() - h) {
          ++r.instances;
          if (distance_to_set(g, v, h) != 1) {
            r.fail(with_detail(g, "H=" + set_text(h) + " v=" + std::to_string(v)));
          }
        }
      });
    }
  }
  return r;
}

// Reduced G of order <= 8 with a nonsingular induced H, r(H) = r(G), and at
// least two vertices outside H.
template <class Fn>
void for_each_full_rank_core(int max_order, int outside, Fn&& fn) {
  for (int n = 2; n <= max_order; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      if (!is_reduced(g)) continue;
      const int rank = rank_of(g);
      if (n - rank < 2 || (outside > 0 && n - rank != outside)) continue;
      for_each_subset(n, [&](VertexSet h) {
        if (h.size() != rank || rank_of(induced_subgraph(g, h)) != rank) return;
        fn(g, h, rank);
      });
    }
  }
}

CheckResult toggle_two_outside(const VerifyContext&) {
  CheckResult r;
  for_each_full_rank_core(8, 2, [&](const Graph& g, VertexSet h, int rank) {
    const VertexSet out = g.vertices() - h;
    const int u = out.first();
    const int v = (out - VertexSet::single(u)).first();
    ++r.instances;
    const int toggled = rank_of(toggle_edge(g, u, v));
    if (toggled != rank + 2) {
      r.fail(with_detail(g, "H=" + set_text(h) + " toggled rank " + std::to_string(toggled)));
    }
  });
  return r;
}

CheckResult toggle_many_outside(const VerifyContext&) {
  CheckResult r;
  for_each_full_rank_core(8, 0, [&](const Graph& g, VertexSet h, int rank) {
    const std::vector<int> out = (g.vertices() - h).to_vector();
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) pairs.emplace_back(out[i], out[j]);
    }
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      Graph t = g;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1) t = toggle_edge(t, pairs[i].first, pairs[i].second);
      }
      ++r.instances;
      if (rank_of(t) < rank + 2) r.fail(with_detail(g, "H=" + set_text(h) + " toggle mask " + std::to_string(mask)));
    }
  });
  return r;
}

// Non-induced containment of a spanning copy of `pattern` in `host`, both of
// the same order.
bool has_spanning_copy(const Graph& host, const Graph& pattern, std::vector<int>& map, VertexSet used) {
  const int i = static_cast<int>(map.size());
  if (i == pattern.order()) return true;
  for (int c : host.vertices() - used) {
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = !pattern.adjacent(i, j) || host.adjacent(c, map[j]);
    if (!ok) continue;
    map.push_back(c);
    if (has_spanning_copy(host, pattern, map, used | VertexSet::single(c))) return true;
    map.pop_back();
  }
  return false;
}

bool has_spanning_copy(const Graph& host, const Graph& pattern) {
  std::vector<int> map;
  return has_spanning_copy(host, pattern, map, VertexSet());
}

// Outside neighbors of a 6-set spanned by P6 (resp. by C).
CheckResult bipartite_degree_bound(const VerifyContext& ctx) {
  CheckResult r;
  const Graph p6 = path_graph(6);
  const Graph& c = ctx.seeds.by_label("C");
  for (const Graph& g : ctx.atlas.reduced_connected()) {
    if (!is_bipartite(g)) continue;
    for_each_subset(g.order(), [&](VertexSet s) {
      if (s.size() != 6) return;
      const Graph sub = induced_subgraph(g, s);
      const bool spans_p6 = has_spanning_copy(sub, p6);
      const bool spans_c = has_spanning_copy(sub, c);
      if (!spans_p6 && !spans_c) return;
      for (int v : g.vertices() - s) {
        const int k = (g.neighbors(v) & s).size();
        if (spans_p6) {
          ++r.instances;
          if (k > 3) r.fail(with_detail(g, "P6 on " + set_text(s) + " v=" + std::to_string(v)));
        }
        if (spans_c) {
          ++r.instances;
          if (k > 2) r.fail(with_detail(g, "C on " + set_text(s) + " v=" + std::to_string(v)));
        }
      }
    });
  }
  return r;
}

// Odd cycles in the atlas: an induced C5 always, an induced F when reduced and connected.
CheckResult nonbipartite_contains_f(const VerifyContext& ctx) {
  CheckResult r;
  const Graph c5 = cycle_graph(5);
  const Graph& f = ctx.seeds.by_label("F");
  for (const AtlasEntry& e : ctx.atlas.entries) {
    if (is_bipartite(e.graph)) continue;
    ++r.instances;
    if (!find_induced_embedding(c5, e.graph)) r.fail(with_detail(e.graph, "no induced C5"));
    if (e.reduced && e.connected && !find_induced_embedding(f, e.graph)) {
      r.fail(with_detail(e.graph, "no induced F"));
    }
  }
  return r;
}

CheckResult seed_catalog_shape(const VerifyContext& ctx) {
  CheckResult r;
  const auto& seeds = ctx.seeds.graphs;
  r.instances = static_cast<long long>(seeds.size());
  if (seeds.size() != 8) r.fail("catalog has " + std::to_string(seeds.size()) + " members");
  int connected = 0, girth6 = 0, girth5 = 0, girth4 = 0, trees = 0;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const Graph& s = seeds[i];
    if (s.order() != 6 || !is_triangle_free(s) || rank_of(s) != 6) r.fail(with_detail(s, "not a nonsingular triangle-free order-6 graph"));
    for (std::size_t j = i + 1; j < seeds.size(); ++j) {
      if (are_isomorphic(s, seeds[j])) r.fail(with_detail(s, "duplicate"));
    }
    if (!is_connected(s)) continue;
    ++connected;
    const auto gi = girth(s);
    if (!gi) ++trees;
    else if (*gi == 6) ++girth6;
    else if (*gi == 5) ++girth5;
    else if (*gi == 4) ++girth4;
  }
  if (connected != 6 || girth6 != 1 || girth5 != 1 || girth4 != 2 || trees != 2) r.fail("structural split differs");
  const Graph three_p2 = disjoint_union(disjoint_union(path_graph(2), path_graph(2)), path_graph(2));
  const Graph p4_p2 = disjoint_union(path_graph(4), path_graph(2));
  if (!are_isomorphic(ctx.seeds.by_label("3P2"), three_p2) || !are_isomorphic(ctx.seeds.by_label("P4+P2"), p4_p2)) {
    r.fail("disconnected members are not 3P2 and P4+P2");
  }
  if (!are_isomorphic(ctx.seeds.by_label("A"), cycle_graph(6)) || !are_isomorphic(ctx.seeds.by_label("D"), path_graph(6))) {
    r.fail("A is not C6 or D is not P6");
  }
  return r;
}

bool certified(const Graph& g, const VerifyContext& ctx, const std::vector<Graph>& hosts) {
  if (!contains_any(g, ctx.seeds.graphs)) return false;
  return std::any_of(hosts.begin(), hosts.end(), [&](const Graph& h) { return find_induced_embedding(g, h).has_value(); });
}

CheckResult theorem_equivalence(const VerifyContext& ctx) {
  if (ctx.cross_check_order < 1 || ctx.cross_check_order > 9) {
    throw std::invalid_argument("cross-check order must lie in [1, 9]");
  }
  CheckResult r;
  const std::vector<Graph> hosts = ctx.atlas.hosts();
  for (int n = 1; n <= ctx.cross_check_order; ++n) {
    for (const Graph& g : enumerate_triangle_free(n)) {
      if (!is_connected(g) || !is_reduced(g)) continue;
      ++r.instances;
      const bool rank6 = rank_of(g) == 6;
      if (rank6 != certified(g, ctx, hosts)) r.fail(with_detail(g, rank6 ? "rank 6 but uncertified" : "certified but rank != 6"));
    }
  }
  return r;
}

CheckResult atlas_completeness(const VerifyContext& ctx) {
  if (ctx.cross_check_order < 1 || ctx.cross_check_order > 9) {
    throw std::invalid_argument("cross-check order must lie in [1, 9]");
  }
  CheckResult r;
  for (int n = 6; n <= ctx.cross_check_order; ++n) {
    for (const Graph& g : enumerate_triangle_free(n)) {
      if (!is_connected(g) || !is_reduced(g) || rank_of(g) != 6) continue;
      ++r.instances;
      if (!ctx.atlas.find(canonical_key(g))) r.fail(with_detail(g, "missing from atlas"));
    }
  }
  return r;
}

CheckResult atlas_soundness(const VerifyContext& ctx) {
  CheckResult r;
  for (const AtlasEntry& e : ctx.atlas.entries) {
    ++r.instances;
    if (!is_triangle_free(e.graph) || rank_of(e.graph) != 6) r.fail(with_detail(e.graph, "not triangle-free rank 6"));
  }
  return r;
}

CheckResult host_soundness(const VerifyContext& ctx) {
  CheckResult r;
  for (const Graph& h : ctx.atlas.hosts()) {
    ++r.instances;
    if (rank_of(h) != 6 || !is_reduced(h) || !is_connected(h) || !is_triangle_free(h)) {
      r.fail(with_detail(h, "host is not a reduced connected triangle-free rank-6 graph"));
    }
    if (h.order() > 12) continue;
    for_each_subset(h.order(), [&](VertexSet s) {
      if (s.size() < 6) return;
      const Graph sub = induced_subgraph(h, s);
      if (!contains_any(sub, ctx.seeds.graphs)) return;
      ++r.instances;
      if (rank_of(sub) != 6) r.fail(with_detail(h, "induced " + set_text(s) + " has rank " + std::to_string(rank_of(sub))));
    });
  }
  return r;
}

CheckResult host_coverage(const VerifyContext& ctx) {
  CheckResult r;
  const std::vector<Graph> hosts = ctx.atlas.hosts();
  for (const Graph& g : ctx.atlas.reduced_connected()) {
    ++r.instances;
    if (!std::any_of(hosts.begin(), hosts.end(), [&](const Graph& h) { return find_induced_embedding(g, h).has_value(); })) {
      r.fail(with_detail(g, "embeds in no host"));
    }
  }
  return r;
}

CheckResult seed_presence(const VerifyContext& ctx) {
  CheckResult r;
  for (const Graph& g : ctx.atlas.reduced_connected()) {
    ++r.instances;
    if (!contains_any(g, ctx.seeds.graphs)) r.fail(with_detail(g, "contains no seed"));
  }
  return r;
}

CheckResult hosts_antichain(const VerifyContext& ctx) {
  CheckResult r;
  const std::vector<Graph> hosts = ctx.atlas.hosts();
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    for (std::size_t j = 0; j < hosts.size(); ++j) {
      if (i == j) continue;
      ++r.instances;
      if (find_induced_embedding(hosts[i], hosts[j])) r.fail(with_detail(hosts[i], "embeds in " + write_graph6(hosts[j])));
    }
  }
  std::string orders;
  for (const Graph& h : hosts) orders += (orders.empty() ? "" : ",") + std::to_string(h.order());
  r.note = std::to_string(hosts.size()) + " maximal reduced connected members (orders " + orders + ") out of " +
           std::to_string(ctx.atlas.reduced_connected().size());
  return r;
}

std::vector<CheckSpec> make_registry() {
  return {
      {"tree-rank-matching", "trees of order <= 10 have rank 2*matching number", tree_rank_is_twice_matching},
      {"pendant-deletion", "graphs of order <= 8: deleting a pendant vertex and its neighbor lowers rank by 2", pendant_deletion},
      {"bipartite-nullity", "bipartite graphs of order n <= 8 realise exactly the nullities n-2k", bipartite_nullity},
      {"outside-pairs-distinct", "reduced G (order <= 7), r(H)=r(G): nonadjacent outside vertices see H differently", outside_nonadjacent_distinct},
      {"outside-differs-from-inside", "reduced G (order <= 7), r(H)=r(G): an outside vertex never copies an H-neighborhood", outside_differs_from_inside},
      {"near-full-rank-dominates", "connected G (order <= 7), r(H) >= r(G)-1: every outside vertex is adjacent to H", near_full_rank_dominates},
      {"toggle-two-outside", "reduced G (order <= 8), nonsingular H with r(H)=r(G), two outside vertices: toggling them adds 2 to rank", toggle_two_outside},
      {"toggle-outside-pairs", "reduced G (order <= 8), nonsingular H with r(H)=r(G): toggling outside pairs adds at least 2 to rank", toggle_many_outside},
      {"bipartite-degree-bound", "connected reduced bipartite rank-6 graphs: outside vertices meet a P6-spanned 6-set in <= 3 and a C-spanned one in <= 2 vertices", bipartite_degree_bound},
      {"nonbipartite-contains-f", "non-bipartite atlas members contain induced C5; reduced connected ones contain induced F", nonbipartite_contains_f},
      {"seed-catalog", "the seed catalog is the 8 nonsingular triangle-free graphs of order 6 with the expected structure", seed_catalog_shape},
      {"rank6-equivalence", "connected reduced triangle-free graphs up to the cross-check order: rank 6 iff seed-containing and host-embedded", theorem_equivalence},
      {"atlas-completeness", "every connected reduced triangle-free rank-6 graph up to the cross-check order is in the atlas", atlas_completeness},
      {"atlas-soundness", "every atlas member is triangle-free with rank 6", atlas_soundness},
      {"host-soundness", "hosts have rank 6 and their seed-containing induced subgraphs have rank 6", host_soundness},
      {"host-coverage", "every reduced connected atlas member embeds in a host", host_coverage},
      {"seed-presence", "every reduced connected atlas member contains a seed", seed_presence},
      {"hosts-antichain", "no host embeds induced in another", hosts_antichain},
  };
}

// The preliminary checks; everything else concerns the atlas as a whole.
const std::set<std::string> kLemmaIds = {
    "tree-rank-matching", "pendant-deletion", "bipartite-nullity",
    "outside-pairs-distinct", "outside-differs-from-inside", "near-full-rank-dominates",
    "toggle-two-outside", "toggle-outside-pairs", "bipartite-degree-bound",
    "nonbipartite-contains-f"};

}  // namespace

void CheckResult::fail(std::string counterexample) {
  passed = false;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(counterexample));
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<CheckSpec>& all_checks() {
  static const std::vector<CheckSpec> registry = make_registry();
  return registry;
}

VerificationReport run_checks(const VerifyContext& ctx, std::span<const std::string> ids) {
  for (const std::string& id : ids) {
    const bool known = std::any_of(all_checks().begin(), all_checks().end(), [&](const CheckSpec& c) { return c.id == id; });
    if (!known) throw std::invalid_argument("unknown check id '" + id + "'");
  }
  VerificationReport report;
  for (const CheckSpec& spec : all_checks()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), spec.id) == ids.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult result = spec.run(ctx);
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.id = spec.id;
    result.statement = spec.statement;
    report.checks.push_back(std::move(result));
  }
  return report;
}

VerificationReport verify_lemma_suite(const VerifyContext& ctx) {
  const std::vector<std::string> ids(kLemmaIds.begin(), kLemmaIds.end());
  return run_checks(ctx, ids);
}

VerificationReport verify_theorem(const Atlas& atlas, const SeedCatalog& seeds, int cross_check_order) {
  const VerifyContext ctx{seeds, atlas, cross_check_order};
  std::vector<std::string> ids;
  for (const CheckSpec& spec : all_checks()) {
    if (!kLemmaIds.contains(spec.id)) ids.push_back(spec.id);
  }
  return run_checks(ctx, ids);
}

}  // namespace rank6
