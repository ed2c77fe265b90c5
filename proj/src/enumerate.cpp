#include "rank6/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "rank6/canonical.hpp"
#include "rank6/graph6.hpp"

namespace rank6 {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::all: return "all";
    case Family::triangle_free: return "triangle-free";
    case Family::bipartite: return "bipartite";
    case Family::forest: return "forest";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::all, Family::triangle_free, Family::bipartite, Family::forest}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

namespace {

// Whether parent + (new vertex adjacent to s) stays in the family, given that
// the parent already does.
bool admissible(const Graph& parent, VertexSet s, Family f) {
  switch (f) {
    case Family::all:
      return true;
    case Family::triangle_free:
      for (int v : s) {
        if (!(parent.neighbors(v) & s).empty()) return false;
      }
      return true;
    case Family::forest:
      for (VertexSet c : components(parent)) {
        if ((c & s).size() > 1) return false;
      }
      return true;
    case Family::bipartite: {
      Graph child = parent;
      child.add_vertex(s);
      return is_bipartite(child);
    }
  }
  return false;
}

std::vector<Graph> extend_level(const std::vector<Graph>& parents, Family f) {
  std::vector<std::pair<std::string, Graph>> out;
  for (const Graph& parent : parents) {
    const int n = parent.order() + 1;
    std::set<std::string> seen;
    const std::uint64_t limit = std::uint64_t{1} << parent.order();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      const VertexSet s(bits);
      if (!admissible(parent, s, f)) continue;
      Graph child = parent;
      const int fresh = child.add_vertex(s);
      const CanonicalForm cf = canonical_form(child);
      const int last = static_cast<int>(std::find(cf.labeling.begin(), cf.labeling.end(), n - 1) -
                                        cf.labeling.begin());
      if (cf.orbit[last] != cf.orbit[fresh]) continue;
      std::string text = write_graph6(cf.graph);
      if (!seen.insert(text).second) continue;
      out.emplace_back(std::move(text), cf.graph);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> graphs;
  graphs.reserve(out.size());
  for (auto& [text, g] : out) graphs.push_back(std::move(g));
  return graphs;
}

void check_bound(int n, int bound, std::string_view what) {
  if (n < 1 || n > bound) {
    throw std::invalid_argument(std::string(what) + " enumeration supports 1 <= n <= " + std::to_string(bound) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Graph> enumerate_family(int n, Family family) {
  check_bound(n, kMaxCanonicalOrder, to_string(family));
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) level = extend_level(level, family);
  return level;
}

std::vector<Graph> enumerate_triangle_free(int n) {
  check_bound(n, 10, "triangle-free");
  return enumerate_family(n, Family::triangle_free);
}

std::vector<Graph> enumerate_bipartite(int n) {
  check_bound(n, 9, "bipartite");
  return enumerate_family(n, Family::bipartite);
}

std::vector<Graph> enumerate_trees(int n) {
  check_bound(n, 10, "tree");
  std::vector<Graph> trees;
  for (Graph& g : enumerate_family(n, Family::forest)) {
    if (g.edge_count() == n - 1) trees.push_back(std::move(g));
  }
  return trees;
}

std::vector<Graph> enumerate_all_graphs(int n) {
  check_bound(n, 8, "graph");
  return enumerate_family(n, Family::all);
}

}  // namespace rank6
