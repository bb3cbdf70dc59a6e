#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "splitkit/abaf.hpp"
#include "splitkit/setaf.hpp"

// Seeded property suites comparing the split solvers with direct enumeration.
// Shared by the unit tests (small counts) and the acceptance runner.
namespace splitkit::testing {

struct SuiteReport {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  /// First few mismatch descriptions.
  std::vector<std::string> failures;
  /// Informational counters that are not pass/fail conditions.
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what);
  bool ok() const { return mismatches == 0 && instances > 0; }
  std::string summary() const;
};

/// At most 8 arguments, 10 attacks, tails of size 3.
Setaf suite_setaf(std::size_t index);
/// Flat, dummy-free, at most 7 assumptions, 10 rules, bodies of size 3.
Abaf suite_abaf(std::size_t index);
/// As suite_abaf with at most 6 assumptions.
Abaf quasi_suite_abaf(std::size_t index);

/// Every nontrivial bottom of the primal condensation and every splittable
/// semantics: split solving equals enumeration, both projection directions,
/// and conflict-freeness transfer.
SuiteReport setaf_splitting_suite(std::size_t count);

/// ABA analogue over splitting sets from the dependency condensation, plus
/// the contrary-derivation and conflict-freeness properties and the reduct and
/// modification shape invariants.
SuiteReport aba_splitting_suite(std::size_t count);

/// Every quasi-splitting with at most `max_k` vulnerabilities: parametrised
/// solving equals stable enumeration and every stable extension has a bottom
/// witness.
SuiteReport quasi_splitting_suite(std::size_t count, std::size_t max_k = 2);

/// ABA and SETAF semantics agree under instantiation; SETAF -> ABA -> SETAF
/// round-trips up to normalization.
SuiteReport instantiation_suite(std::size_t aba_count, std::size_t setaf_count);

/// For uninfluenced assumption sets, extensions of the induced projection are
/// the restrictions of the extensions of the whole framework.
SuiteReport directionality_suite(std::size_t count);

}  // namespace splitkit::testing
