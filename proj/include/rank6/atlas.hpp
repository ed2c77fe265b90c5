#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rank6/canonical.hpp"
#include "rank6/graph.hpp"

namespace rank6 {

/// The nonsingular triangle-free graphs of order 6, in the order
/// A, B, C, D, E, F, 3P2, P4∪P2.
struct SeedCatalog {
  std::vector<Graph> graphs;
  std::vector<std::string> labels;

  std::string content_hash() const;
  /// Index of the member with this label; throws std::out_of_range.
  std::size_t index_of(std::string_view label) const;
  const Graph& by_label(std::string_view label) const { return graphs[index_of(label)]; }
};

/// Thrown when the seed derivation does not produce exactly the eight
/// expected structural types.
class CatalogMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SeedCatalog derive_seed_catalog();

struct AtlasEntry {
  CanonicalKey key;
  Graph graph;  // canonical labeling; write_graph6(graph) == key.str()
  int rank = 6;
  bool reduced = true;
  bool connected = false;
  bool host = false;

  int order() const { return graph.order(); }
};

struct AtlasProvenance {
  int format_version = 1;
  int max_order = 14;
  std::string seed_catalog_hash;
};

struct Atlas {
  std::vector<AtlasEntry> entries;  // sorted by (order, key)
  AtlasProvenance provenance;

  std::vector<Graph> hosts() const;
  std::vector<Graph> reduced_connected() const;
  /// Entry with this canonical key, or nullptr.
  const AtlasEntry* find(const CanonicalKey& key) const;
};

class SearchNotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AtlasBuildOptions {
  int max_order = 14;
  int threads = 1;
};

/// Breadth-first closure from the seeds: every frontier graph is extended by
/// one vertex with every nonempty independent neighborhood, keeping children
/// that stay reduced with rank exactly 6, deduplicated by canonical key.
/// Throws SearchNotClosed if anything exists beyond max_order.
Atlas build_rank6_atlas(const SeedCatalog& seeds, const AtlasBuildOptions& options = {});

/// Members into which no other member embeds induced. Input must be pairwise
/// nonisomorphic; output keeps input order.
std::vector<Graph> maximal_elements(std::span<const Graph> members);
std::vector<Graph> maximal_elements(const Atlas& atlas);

class AtlasFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void save_atlas(const Atlas& atlas, std::ostream& out);
void save_atlas(const Atlas& atlas, const std::filesystem::path& path);
/// Parses and revalidates every invariant; throws AtlasFormatError naming the
/// offending line or invariant.
Atlas load_atlas(std::istream& in);
Atlas load_atlas(const std::filesystem::path& path);

}  // namespace rank6
