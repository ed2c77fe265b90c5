#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rank6/graph.hpp"

namespace rank6 {

inline constexpr int kMaxCanonicalOrder = 14;

/// graph6 text of the canonically relabeled graph. Equal keys iff isomorphic.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string graph6) : text_(std::move(graph6)) {}
  const std::string& str() const { return text_; }
  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string text_;
};

struct CanonicalForm {
  Graph graph;                 // g relabeled by `labeling`
  std::vector<int> labeling;   // labeling[v] = canonical position of v
  std::vector<int> orbit;      // least vertex in v's automorphism orbit
};

/// Canonical labeling by individualization-refinement over the twin quotient,
/// keeping the lexicographically least relabeled adjacency matrix.
/// Throws std::invalid_argument above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

/// Same for a vertex-coloured graph. Colours are part of the isomorphism
/// type: canonical positions are sorted by colour first.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors);

CanonicalKey canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Injective, edge- and non-edge-preserving map from pattern into host.
struct Embedding {
  std::vector<int> map;
  bool operator==(const Embedding&) const = default;
};

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

/// Backtracking over pattern vertices in index order, host candidates in
/// index order, pruned by degree and adjacency to already placed vertices.
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host);

/// Least i such that patterns[i] embeds induced into host.
std::optional<std::size_t> contains_any(const Graph& host, std::span<const Graph> patterns);

}  // namespace rank6
