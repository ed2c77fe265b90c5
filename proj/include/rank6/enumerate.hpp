#pragma once

#include <string_view>
#include <vector>

#include "rank6/graph.hpp"

namespace rank6 {

/// Hereditary graph families the generator can extend vertex by vertex.
enum class Family { all, triangle_free, bipartite, forest };

std::string_view to_string(Family f);
/// Throws std::invalid_argument on an unknown name.
Family family_from_string(std::string_view name);

/// Every graph of order n in the family, once per isomorphism class, in
/// canonical labeling, sorted by graph6 text.
///
/// Canonical augmentation: each order-(n-1) graph is extended by one vertex
/// in every admissible way; a child is kept iff the new vertex lies in the
/// automorphism orbit of the child's canonically last vertex, and children of
/// one parent are deduplicated by canonical form.
std::vector<Graph> enumerate_family(int n, Family family);

/// n <= 10.
std::vector<Graph> enumerate_triangle_free(int n);
/// n <= 9.
std::vector<Graph> enumerate_bipartite(int n);
/// n <= 10.
std::vector<Graph> enumerate_trees(int n);
/// n <= 8.
std::vector<Graph> enumerate_all_graphs(int n);

}  // namespace rank6
