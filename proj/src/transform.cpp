#include "rank6/transform.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rank6 {

MultiplicityVector::MultiplicityVector(std::vector<int> m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i] < 1) {
      throw std::invalid_argument("multiplicity " + std::to_string(m_[i]) + " at position " +
                                  std::to_string(i) + " is not positive");
    }
  }
}

int MultiplicityVector::total() const { return std::accumulate(m_.begin(), m_.end(), 0); }

Graph multiply_vertices(const Graph& g, const MultiplicityVector& m) {
  if (m.size() != g.order()) {
    throw std::invalid_argument("multiplicity vector has length " + std::to_string(m.size()) +
                                " but the graph has order " + std::to_string(g.order()));
  }
  const int total = m.total();
  if (total > kMaxOrder) throw std::invalid_argument("blow-up would exceed 64 vertices");
  std::vector<int> start(g.order() + 1, 0);
  for (int i = 0; i < g.order(); ++i) start[i + 1] = start[i] + m[i];
  Graph out(total);
  for (auto [u, v] : g.edges()) {
    for (int a = start[u]; a < start[u + 1]; ++a) {
      for (int b = start[v]; b < start[v + 1]; ++b) out.add_edge(a, b);
    }
  }
  return out;
}

ReductionResult reduced_form(const Graph& g) {
  const int n = g.order();
  std::vector<int> class_of(n, -1);
  std::vector<int> reps, counts;
  for (int v = 0; v < n; ++v) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (g.neighbors(reps[c]) == g.neighbors(v)) {
        class_of[v] = static_cast<int>(c);
        ++counts[c];
        break;
      }
    }
    if (class_of[v] < 0) {
      class_of[v] = static_cast<int>(reps.size());
      reps.push_back(v);
      counts.push_back(1);
    }
  }
  Graph reduced(static_cast<int>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (int w : g.neighbors(reps[a])) {
      if (class_of[w] > static_cast<int>(a)) reduced.add_edge(static_cast<int>(a), class_of[w]);
    }
  }
  return {reduced, MultiplicityVector(counts), class_of};
}

bool is_reduced(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.neighbors(u) == g.neighbors(v)) return false;
    }
  }
  return true;
}

Graph toggle_edge(const Graph& g, int u, int v) {
  Graph out = g;
  if (u >= 0 && v >= 0 && u < g.order() && v < g.order() && g.adjacent(u, v)) {
    out.remove_edge(u, v);
  } else {
    out.add_edge(u, v);  // range and loop checks live in add_edge
  }
  return out;
}

}  // namespace rank6
