#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rank6/atlas.hpp"

namespace rank6 {

/// Outcome of one universally quantified statement checked over its
/// hypothesis class. A failed check always carries counterexamples (graph6).
struct CheckResult {
  std::string id;
  std::string statement;
  long long instances = 0;
  bool passed = true;
  std::vector<std::string> counterexamples;
  std::string note;
  double wall_ms = 0;

  /// Records a failing instance; keeps the first few for the report.
  void fail(std::string counterexample);
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyContext {
  const SeedCatalog& seeds;
  const Atlas& atlas;
  int cross_check_order = 9;
};

struct CheckSpec {
  std::string id;
  std::string statement;
  std::function<CheckResult(const VerifyContext&)> run;
};

/// Every check, lemma checks first, in a fixed order.
const std::vector<CheckSpec>& all_checks();

/// Runs the named checks (all when `ids` is empty) in registry order.
/// Throws std::invalid_argument for an unknown id.
VerificationReport run_checks(const VerifyContext& ctx, std::span<const std::string> ids = {});

/// The preliminary-lemma checks plus the two structural lemmas about the atlas.
VerificationReport verify_lemma_suite(const VerifyContext& ctx);

/// Theorem checks: seed catalog, equivalence against independent enumeration
/// up to cross_check_order (<= 9), soundness, coverage, host antichain.
VerificationReport verify_theorem(const Atlas& atlas, const SeedCatalog& seeds, int cross_check_order = 9);

}  // namespace rank6
