#include "rank6/classifier.hpp"

#include <algorithm>

#include "rank6/exact_rank.hpp"
#include "rank6/hash.hpp"

namespace rank6 {

namespace {

constexpr int kTargetRank = 6;

// Canonical form of the twin quotient coloured by class size: equal for two
// graphs iff they are isomorphic, as long as the quotient fits the labeler.
std::string blow_up_key(const Graph& reduced, const std::vector<int>& mult) {
  const CanonicalForm cf = canonical_form(reduced, mult);
  std::vector<int> colours(mult.size());
  for (std::size_t v = 0; v < mult.size(); ++v) colours[cf.labeling[v]] = mult[v];
  std::string key = cf.graph.order() <= 62 ? write_graph6(cf.graph) : "";
  for (int c : colours) key += " " + std::to_string(c);
  return key;
}

}  // namespace

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::not_connected: return "not-connected";
    case RejectReason::has_triangle: return "has-triangle";
    case RejectReason::rank_too_low: return "rank-too-low";
    case RejectReason::rank_too_high: return "rank-too-high";
  }
  return "?";
}

Classification classify(const Graph& g, const SeedCatalog& catalog, std::span<const Graph> hosts) {
  if (g.order() == 0) throw std::invalid_argument("cannot classify the empty graph");
  if (!is_connected(g)) {
    Rejection r;
    r.reason = RejectReason::not_connected;
    r.components = components(g);
    return r;
  }
  if (const auto t = find_triangle(g)) {
    Rejection r;
    r.reason = RejectReason::has_triangle;
    r.triangle = *t;
    return r;
  }
  ReductionResult red = reduced_form(g);
  const int rank = rank_of(red.reduced);
  if (rank != rank_of(g)) {
    throw TheoremFalsified("reduction changed the rank of " + write_graph6(g));
  }
  if (rank != kTargetRank) {
    Rejection r;
    r.reason = rank < kTargetRank ? RejectReason::rank_too_low : RejectReason::rank_too_high;
    r.rank = rank;
    return r;
  }

  ClassificationCertificate cert;
  cert.catalog_hash = catalog.content_hash();
  cert.hosts_hash = graph_list_hash(hosts);
  const auto seed = contains_any(red.reduced, catalog.graphs);
  if (!seed) throw TheoremFalsified("rank-6 graph " + write_graph6(g) + " contains no seed");
  cert.seed_index = *seed;
  cert.seed_embedding = *find_induced_embedding(catalog.graphs[*seed], red.reduced);
  bool hosted = false;
  for (std::size_t i = 0; i < hosts.size() && !hosted; ++i) {
    if (auto e = find_induced_embedding(red.reduced, hosts[i])) {
      cert.host_index = i;
      cert.host_embedding = std::move(*e);
      hosted = true;
    }
  }
  if (!hosted) throw TheoremFalsified("rank-6 graph " + write_graph6(g) + " embeds in no host");
  cert.reduced_graph = std::move(red.reduced);
  cert.multiplicities = std::move(red.multiplicities);
  return cert;
}

CertificateCheck validate_certificate(const Graph& g, const ClassificationCertificate& cert,
                                      const SeedCatalog& catalog, std::span<const Graph> hosts) {
  CertificateCheck out;
  auto reject = [&](std::string why) {
    out.valid = false;
    out.reasons.push_back(std::move(why));
  };

  if (cert.catalog_hash != catalog.content_hash()) reject("seed catalog hash mismatch");
  if (cert.hosts_hash != graph_list_hash(hosts)) reject("host list hash mismatch");

  const Graph& r = cert.reduced_graph;
  if (cert.seed_index >= catalog.graphs.size()) {
    reject("seed index out of range");
  } else if (!is_induced_embedding(catalog.graphs[cert.seed_index], r, cert.seed_embedding)) {
    reject("seed embedding is not an induced embedding");
  }
  if (cert.host_index >= hosts.size()) {
    reject("host index out of range");
  } else if (!is_induced_embedding(r, hosts[cert.host_index], cert.host_embedding)) {
    reject("host embedding is not an induced embedding");
  }

  if (r.order() == 0 || cert.multiplicities.size() != r.order()) {
    reject("multiplicity vector does not match the reduced graph");
  } else if (!is_reduced(r)) {
    reject("reduced graph has twins");
  } else if (r.order() > kMaxCanonicalOrder) {
    reject("reduced graph is too large to compare");
  } else if (cert.multiplicities.total() != g.order()) {
    reject("blow-up order differs from the input");
  } else {
    const ReductionResult actual = reduced_form(g);
    if (actual.reduced.order() != r.order() ||
        blow_up_key(actual.reduced, actual.multiplicities.values()) != blow_up_key(r, cert.multiplicities.values())) {
      reject("blow-up is not isomorphic to the input");
    }
  }

  if (r.order() > 0 && rank_of(r) != kTargetRank) reject("reduced graph does not have rank 6");
  return out;
}

}  // namespace rank6
