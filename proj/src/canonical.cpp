#include "rank6/canonical.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rank6/graph6.hpp"

namespace rank6 {

namespace {

constexpr int kNoJump = INT_MAX;

using Rows = std::array<std::uint64_t, kMaxCanonicalOrder>;

struct UnionFind {
  std::array<int, kMaxCanonicalOrder> parent{};
  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Individualization-refinement over the twin quotient of a coloured graph.
// Quotient vertices are the classes of (colour, open neighborhood); each
// class carries its colour and size as the initial cell key.
class Labeler {
 public:
  Labeler(const Graph& g, std::span<const int> colors) : g_(g), n_(g.order()) {
    std::vector<int> rep;
    class_of_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      for (std::size_t c = 0; c < rep.size(); ++c) {
        if (colors[rep[c]] == colors[v] && g.neighbors(rep[c]) == g.neighbors(v)) {
          class_of_[v] = static_cast<int>(c);
          members_[c].insert(v);
          break;
        }
      }
      if (class_of_[v] < 0) {
        class_of_[v] = static_cast<int>(rep.size());
        members_[rep.size()] = VertexSet::single(v);
        rep.push_back(v);
      }
    }
    k_ = static_cast<int>(rep.size());
    for (int a = 0; a < k_; ++a) {
      for (int w : g.neighbors(rep[a])) radj_[a].insert(class_of_[w]);
    }

    std::map<std::pair<int, int>, VertexSet> initial;
    for (int a = 0; a < k_; ++a) initial[{colors[rep[a]], members_[a].size()}].insert(a);
    for (auto& [key, cell] : initial) root_cells_.push_back(cell);
  }

  CanonicalForm run() {
    std::vector<VertexSet> cells = root_cells_;
    search(cells, 0);

    CanonicalForm out;
    out.labeling = expand(best_seq_);
    out.graph = g_.permuted(out.labeling);

    UnionFind uf(k_);
    for (const auto& gamma : automorphisms_) {
      for (int a = 0; a < k_; ++a) uf.unite(a, gamma[a]);
    }
    std::vector<int> least(k_, INT_MAX);
    for (int v = 0; v < n_; ++v) {
      int& m = least[uf.find(class_of_[v])];
      m = std::min(m, v);
    }
    out.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbit[v] = least[uf.find(class_of_[v])];
    return out;
  }

 private:
  void refine(std::vector<VertexSet>& cells) const {
    using Signature = std::array<std::uint8_t, kMaxCanonicalOrder>;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t ci = 0; ci < cells.size() && !changed; ++ci) {
        if (cells[ci].size() == 1) continue;
        std::vector<std::pair<Signature, int>> sig;
        for (int a : cells[ci]) {
          Signature s{};
          for (std::size_t cj = 0; cj < cells.size(); ++cj) {
            s[cj] = static_cast<std::uint8_t>((radj_[a] & cells[cj]).size());
          }
          sig.emplace_back(s, a);
        }
        std::sort(sig.begin(), sig.end());
        if (sig.front().first == sig.back().first) continue;
        std::vector<VertexSet> parts;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i == 0 || sig[i].first != sig[i - 1].first) parts.emplace_back();
          parts.back().insert(sig[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), parts.begin(), parts.end());
        changed = true;
      }
    }
  }

  std::vector<int> expand(const std::vector<int>& seq) const {
    std::vector<int> labeling(n_);
    int next = 0;
    for (int a : seq) {
      for (int v : members_[a]) labeling[v] = next++;
    }
    return labeling;
  }

  Rows encode(const std::vector<int>& seq) const {
    const std::vector<int> labeling = expand(seq);
    Rows rows{};
    for (int v = 0; v < n_; ++v) {
      std::uint64_t bits = 0;
      for (int w : g_.neighbors(v)) bits |= std::uint64_t{1} << labeling[w];
      rows[labeling[v]] = bits;
    }
    return rows;
  }

  std::vector<int> mapping(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> gamma(k_);
    for (int i = 0; i < k_; ++i) gamma[from[i]] = to[i];
    return gamma;
  }

  int leaf(const std::vector<VertexSet>& cells) {
    std::vector<int> seq;
    seq.reserve(k_);
    for (VertexSet c : cells) seq.push_back(c.first());
    const Rows rows = encode(seq);
    if (first_seq_.empty()) {
      first_seq_ = best_seq_ = seq;
      first_rows_ = best_rows_ = rows;
      first_path_ = path_;
      return kNoJump;
    }
    if (rows == first_rows_) {
      automorphisms_.push_back(mapping(first_seq_, seq));
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    const auto cmp = std::lexicographical_compare_three_way(rows.begin(), rows.begin() + n_,
                                                            best_rows_.begin(), best_rows_.begin() + n_);
    if (cmp < 0) {
      best_seq_ = seq;
      best_rows_ = rows;
    } else if (cmp == 0) {
      automorphisms_.push_back(mapping(best_seq_, seq));
    }
    return kNoJump;
  }

  int search(std::vector<VertexSet> cells, int depth) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) return leaf(cells);

    VertexSet explored;
    for (int v : cells[target]) {
      if (!explored.empty() && equivalent_to_explored(v, explored, depth)) continue;
      explored.insert(v);
      std::vector<VertexSet> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(VertexSet::single(v));
      VertexSet rest = cells[target];
      rest.erase(v);
      child.push_back(rest);
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      path_.push_back(v);
      const int jump = search(std::move(child), depth + 1);
      path_.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  // Orbit test under the automorphisms found so far that fix the current
  // path pointwise.
  bool equivalent_to_explored(int v, VertexSet explored, int depth) const {
    UnionFind uf(k_);
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
      if (!fixes) continue;
      any = true;
      for (int a = 0; a < k_; ++a) uf.unite(a, gamma[a]);
    }
    if (!any) return false;
    for (int u : explored) {
      if (uf.find(u) == uf.find(v)) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_ = 0;
  std::vector<int> class_of_;
  std::array<VertexSet, kMaxCanonicalOrder> members_{};
  std::array<VertexSet, kMaxCanonicalOrder> radj_{};
  std::vector<VertexSet> root_cells_;

  std::vector<int> path_, first_path_;
  std::vector<int> first_seq_, best_seq_;
  Rows first_rows_{}, best_rows_{};
  std::vector<std::vector<int>> automorphisms_;
};

void check_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical labeling supports order <= 14, got " + std::to_string(g.order()));
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  check_order(g);
  if (static_cast<int>(colors.size()) != g.order()) throw std::invalid_argument("colour vector size mismatch");
  if (g.order() == 0) return {};
  return Labeler(g, colors).run();
}

CanonicalForm canonical_form(const Graph& g) {
  const std::vector<int> colors(g.order(), 0);
  return canonical_form(g, colors);
}

CanonicalKey canonical_key(const Graph& g) { return CanonicalKey(write_graph6(canonical_form(g).graph)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.order()) return false;
  VertexSet image;
  for (int x : e.map) {
    if (x < 0 || x >= host.order() || image.contains(x)) return false;
    image.insert(x);
  }
  for (int a = 0; a < pattern.order(); ++a) {
    for (int b = a + 1; b < pattern.order(); ++b) {
      if (pattern.adjacent(a, b) != host.adjacent(e.map[a], e.map[b])) return false;
    }
  }
  return true;
}

namespace {

bool extend(const Graph& p, const Graph& h, std::vector<int>& map, VertexSet used) {
  const int i = static_cast<int>(map.size());
  if (i == p.order()) return true;
  VertexSet cand = h.vertices() - used;
  for (int j = 0; j < i; ++j) {
    if (p.adjacent(i, j)) {
      cand &= h.neighbors(map[j]);
    } else {
      cand -= h.neighbors(map[j]);
    }
  }
  const int need = p.degree(i);
  for (int c : cand) {
    if (h.degree(c) < need) continue;
    map.push_back(c);
    VertexSet next = used;
    next.insert(c);
    if (extend(p, h, map, next)) return true;
    map.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;
  std::vector<int> map;
  map.reserve(pattern.order());
  if (!extend(pattern, host, map, VertexSet())) return std::nullopt;
  return Embedding{std::move(map)};
}

std::optional<std::size_t> contains_any(const Graph& host, std::span<const Graph> patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (find_induced_embedding(patterns[i], host)) return i;
  }
  return std::nullopt;
}

}  // namespace rank6
