#include "rank6/atlas.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "rank6/enumerate.hpp"
#include "rank6/exact_rank.hpp"
#include "rank6/graph6.hpp"
#include "rank6/hash.hpp"
#include "rank6/transform.hpp"

namespace rank6 {

namespace {

constexpr int kSeedOrder = 6;
constexpr int kTargetRank = 6;
const std::vector<std::string> kLabelOrder = {"A", "B", "C", "D", "E", "F", "3P2", "P4+P2"};

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Structural signature from the girth / tree / connectivity case split.
std::string seed_label(const Graph& g) {
  if (!is_connected(g)) return g.edge_count() == 3 ? "3P2" : "P4+P2";
  const auto gi = girth(g);
  if (!gi) return max_degree(g) == 2 ? "D" : "E";
  switch (*gi) {
    case 6: return "A";
    case 5: return "F";
    case 4: return g.edge_count() == 7 ? "B" : "C";
    default: return "?";
  }
}

}  // namespace

std::string SeedCatalog::content_hash() const { return graph_list_hash(graphs); }

std::size_t SeedCatalog::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw std::out_of_range("no seed labelled '" + std::string(label) + "'");
}

SeedCatalog derive_seed_catalog() {
  std::map<std::string, std::vector<Graph>> by_label;
  int count = 0;
  for (const Graph& g : enumerate_triangle_free(kSeedOrder)) {
    if (rank_of(g) != kTargetRank) continue;
    ++count;
    by_label[seed_label(g)].push_back(g);
  }
  if (count != 8) {
    throw CatalogMismatch("expected 8 nonsingular triangle-free graphs of order 6, found " + std::to_string(count));
  }
  SeedCatalog catalog;
  for (const std::string& label : kLabelOrder) {
    const auto it = by_label.find(label);
    if (it == by_label.end() || it->second.size() != 1) {
      throw CatalogMismatch("seed type " + label + " does not occur exactly once");
    }
    catalog.graphs.push_back(it->second.front());
    catalog.labels.push_back(label);
  }
  return catalog;
}

std::vector<Graph> Atlas::hosts() const {
  std::vector<Graph> out;
  for (const auto& e : entries) {
    if (e.host) out.push_back(e.graph);
  }
  return out;
}

std::vector<Graph> Atlas::reduced_connected() const {
  std::vector<Graph> out;
  for (const auto& e : entries) {
    if (e.reduced && e.connected) out.push_back(e.graph);
  }
  return out;
}

const AtlasEntry* Atlas::find(const CanonicalKey& key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

namespace {

using Keyed = std::pair<CanonicalKey, Graph>;

void extend_one(const Graph& parent, std::vector<Keyed>& out) {
  const int k = parent.order();
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const VertexSet s(bits);
    bool ok = true;
    for (int v : s) {
      if (!(parent.neighbors(v) & s).empty()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // The child stays reduced iff no existing vertex already has neighborhood s.
    for (int u = 0; u < k && ok; ++u) ok = parent.neighbors(u) != s;
    if (!ok) continue;
    Graph child = parent;
    child.add_vertex(s);
    if (rank_of(child) != kTargetRank) continue;
    const CanonicalForm cf = canonical_form(child);
    out.emplace_back(CanonicalKey(write_graph6(cf.graph)), cf.graph);
  }
}

std::vector<Keyed> sorted_unique(std::vector<Keyed> items) {
  std::sort(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) { return a.first < b.first; });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const Keyed& a, const Keyed& b) { return a.first == b.first; }),
              items.end());
  return items;
}

// Workers take parents round-robin; the merge is a sort by key, so the level
// does not depend on the worker count.
std::vector<Keyed> next_level(const std::vector<Keyed>& frontier, int threads) {
  threads = std::max(1, threads);
  std::vector<std::vector<Keyed>> partial(threads);
  auto work = [&](int t) {
    for (std::size_t i = t; i < frontier.size(); i += threads) extend_one(frontier[i].second, partial[t]);
    partial[t] = sorted_unique(std::move(partial[t]));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<Keyed> merged;
  for (auto& p : partial) merged.insert(merged.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return sorted_unique(std::move(merged));
}

}  // namespace

Atlas build_rank6_atlas(const SeedCatalog& seeds, const AtlasBuildOptions& options) {
  if (options.max_order < kSeedOrder) throw std::invalid_argument("max_order must be at least 6");
  if (options.max_order > kMaxCanonicalOrder) {
    throw std::invalid_argument("max_order above 14 is not supported by the canonical labeler");
  }

  Atlas atlas;
  atlas.provenance.max_order = options.max_order;
  atlas.provenance.seed_catalog_hash = seeds.content_hash();

  std::vector<Keyed> level;
  for (const Graph& s : seeds.graphs) {
    const CanonicalForm cf = canonical_form(s);
    level.emplace_back(CanonicalKey(write_graph6(cf.graph)), cf.graph);
  }
  level = sorted_unique(std::move(level));

  std::vector<Keyed> found;
  for (int order = kSeedOrder; !level.empty(); ++order) {
    found.insert(found.end(), level.begin(), level.end());
    if (order == options.max_order) {
      // Probe one level further; closure means nothing lives there. Order 15
      // is past the labeler's bound, so at 14 the probe only checks existence.
      bool beyond = false;
      for (const auto& [key, g] : level) {
        const int k = g.order();
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k) && !beyond; ++bits) {
          const VertexSet s(bits);
          bool ok = true;
          for (int v : s) ok = ok && (g.neighbors(v) & s).empty();
          for (int u = 0; u < k && ok; ++u) ok = g.neighbors(u) != s;
          if (!ok) continue;
          Graph child = g;
          child.add_vertex(s);
          beyond = rank_of(child) == kTargetRank;
        }
        if (beyond) break;
      }
      if (beyond) {
        throw SearchNotClosed("reduced triangle-free rank-6 graphs exist beyond order " +
                              std::to_string(options.max_order));
      }
      break;
    }
    level = next_level(level, options.threads);
  }

  for (auto& [key, g] : found) {
    AtlasEntry e;
    e.key = key;
    e.graph = g;
    e.rank = kTargetRank;
    e.reduced = is_reduced(g);
    e.connected = is_connected(g);
    atlas.entries.push_back(std::move(e));
  }
  std::stable_sort(atlas.entries.begin(), atlas.entries.end(), [](const AtlasEntry& a, const AtlasEntry& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.key < b.key;
  });

  const std::vector<Graph> hosts = maximal_elements(atlas);
  for (auto& e : atlas.entries) {
    e.host = e.reduced && e.connected &&
             std::find(hosts.begin(), hosts.end(), e.graph) != hosts.end();
  }
  return atlas;
}

std::vector<Graph> maximal_elements(std::span<const Graph> members) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < members.size() && maximal; ++j) {
      if (i == j || members[j].order() <= members[i].order()) continue;
      if (find_induced_embedding(members[i], members[j])) maximal = false;
    }
    if (maximal) out.push_back(members[i]);
  }
  return out;
}

std::vector<Graph> maximal_elements(const Atlas& atlas) { return maximal_elements(atlas.reduced_connected()); }

}  // namespace rank6
