#include "rank6/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rank6 {

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside [0, 64]");
  }
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside order " + std::to_string(order_));
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

int Graph::add_vertex(VertexSet nbrs) {
  if (order_ == kMaxOrder) throw std::invalid_argument("graph already has 64 vertices");
  if (!nbrs.subset_of(vertices())) throw std::out_of_range("neighbor outside graph");
  const int v = order_++;
  adj_[v] = nbrs;
  for (int u : nbrs) adj_[u].insert(v);
  return v;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += adj_[v].size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) throw std::invalid_argument("permutation size mismatch");
  Graph h(order_);
  for (int u = 0; u < order_; ++u) {
    VertexSet row;
    for (int v : adj_[u]) row.insert(perm[v]);
    h.adj_[perm[u]] = row;
  }
  return h;
}

bool Graph::operator==(const Graph& o) const {
  return order_ == o.order_ && std::equal(adj_.begin(), adj_.begin() + order_, o.adj_.begin());
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const VertexSet common = g.neighbors(u) & (g.neighbors(v) - VertexSet::range(v + 1));
      if (!common.empty()) return std::array<int, 3>{u, v, common.first()};
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (!(g.neighbors(u) & g.neighbors(v)).empty()) return false;
    }
  }
  return true;
}

namespace {

VertexSet reach(const Graph& g, int start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("connectivity of the empty graph is undefined");
  return reach(g, 0) == g.vertices();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    const VertexSet c = reach(g, left.first());
    out.push_back(c);
    left -= c;
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  VertexSet colored, side;
  for (int s = 0; s < g.order(); ++s) {
    if (colored.contains(s)) continue;
    colored.insert(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!colored.contains(w)) {
          colored.insert(w);
          if (!side.contains(v)) side.insert(w);
          stack.push_back(w);
        } else if (side.contains(w) == side.contains(v)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n), parent(n), queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

std::optional<int> distance_to_set(const Graph& g, int v, VertexSet s) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex outside graph");
  if (s.empty()) throw std::invalid_argument("distance to an empty vertex set");
  if (s.contains(v)) throw std::invalid_argument("vertex lies in the target set");
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbors(u);
    next -= seen;
    if (!(next & s).empty()) return d;
    seen |= next;
    frontier = next;
  }
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.vertices();
  std::vector<int> index(g.order(), -1);
  int k = 0;
  for (int v : s) index[v] = k++;
  Graph h(k);
  for (int u : s) {
    for (int v : g.neighbors(u) & s) {
      if (u < v) h.add_edge(index[u], index[v]);
    }
  }
  return h;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace rank6
