#pragma once

#include <vector>

#include "rank6/graph.hpp"

namespace rank6 {

/// Positive multiplicity per vertex of a reduced graph.
class MultiplicityVector {
 public:
  MultiplicityVector() = default;
  /// Throws std::invalid_argument on a zero or negative entry.
  explicit MultiplicityVector(std::vector<int> m);
  static MultiplicityVector ones(int n) { return MultiplicityVector(std::vector<int>(n, 1)); }

  const std::vector<int>& values() const { return m_; }
  int size() const { return static_cast<int>(m_.size()); }
  int operator[](int i) const { return m_[i]; }
  int total() const;

  bool operator==(const MultiplicityVector&) const = default;

 private:
  std::vector<int> m_;
};

struct ReductionResult {
  Graph reduced;
  MultiplicityVector multiplicities;
  /// class_of[v] = index of v's class in `reduced`.
  std::vector<int> class_of;
};

/// G∘m: vertex i becomes an independent block of m[i] copies; blocks are laid
/// out in vertex order.
Graph multiply_vertices(const Graph& g, const MultiplicityVector& m);

/// Quotient by equal open neighborhoods. Each class is represented by its
/// lowest original index and classes are ordered by representative.
ReductionResult reduced_form(const Graph& g);

bool is_reduced(const Graph& g);

/// Flips the adjacency of u and v.
Graph toggle_edge(const Graph& g, int u, int v);

}  // namespace rank6
