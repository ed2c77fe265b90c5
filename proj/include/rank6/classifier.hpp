#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rank6/atlas.hpp"
#include "rank6/canonical.hpp"
#include "rank6/transform.hpp"

namespace rank6 {

/// Witness that a connected triangle-free graph has rank 6: its reduced form
/// contains a seed induced and embeds induced into a host.
struct ClassificationCertificate {
  Graph reduced_graph;
  MultiplicityVector multiplicities;
  std::size_t seed_index = 0;
  Embedding seed_embedding;  // seed -> reduced_graph
  std::size_t host_index = 0;
  Embedding host_embedding;  // reduced_graph -> host
  std::string catalog_hash;
  std::string hosts_hash;
};

enum class RejectReason { not_connected, has_triangle, rank_too_low, rank_too_high };

std::string_view to_string(RejectReason r);

struct Rejection {
  RejectReason reason = RejectReason::not_connected;
  /// Exactly one is meaningful, per reason.
  int rank = 0;
  std::array<int, 3> triangle{};
  std::vector<VertexSet> components;
};

using Classification = std::variant<ClassificationCertificate, Rejection>;

/// Raised when rank 6 holds but no seed or host embedding exists, or when
/// reduction changes the rank.
class TheoremFalsified : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws std::invalid_argument on the empty graph.
Classification classify(const Graph& g, const SeedCatalog& catalog, std::span<const Graph> hosts);

struct CertificateCheck {
  bool valid = true;
  std::vector<std::string> reasons;
};

CertificateCheck validate_certificate(const Graph& g, const ClassificationCertificate& cert,
                                      const SeedCatalog& catalog, std::span<const Graph> hosts);

}  // namespace rank6
