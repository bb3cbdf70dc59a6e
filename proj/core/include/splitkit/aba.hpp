#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "splitkit/abaf.hpp"
#include "splitkit/id_set.hpp"
#include "splitkit/semantics.hpp"

namespace splitkit {

using RuleFilter = IndexFilter;

struct ValidationReport {
  bool flat = true;
  /// Rules whose body is not derivable from the full assumption set.
  std::vector<std::size_t> dummy_rules;
  /// Rules whose head is an assumption.
  std::vector<std::size_t> non_flat_rules;
};

ValidationReport validate(const Abaf& abaf);

/// Same atoms and assumptions, without the listed rules.
Abaf without_rules(const Abaf& abaf, std::span<const std::size_t> rules);

/// Everything derivable from `s`: the least superset of `s` closed under the
/// (filtered) rules.
IdSet theory_closure(const Abaf& abaf, const IdSet& s, const RuleFilter& filter = RuleFilter::all());

/// For every atom, the subset-minimal assumption sets deriving it.
class SupportTable {
 public:
  explicit SupportTable(std::vector<Family> entries) : entries_(std::move(entries)) {}
  const Family& supports(AtomId p) const { return entries_[p]; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Family> entries_;
};

SupportTable minimal_supports(const Abaf& abaf);

/// For every atom, every assumption set that is exactly the leaf set of some
/// derivation tree. Exponential; refused above `guard` assumptions.
SupportTable derivation_leaf_sets(const Abaf& abaf, std::size_t guard);

struct RangeResult {
  IdSet attacked;
  IdSet range;
};

RangeResult range(const Abaf& abaf, const IdSet& s, const RuleFilter& filter = RuleFilter::all());

/// Enumeration guard: SPLITKIT_GUARD when set, otherwise 20.
std::size_t default_guard();

/// Exact membership test. GRD and PREF go through complete enumeration and are
/// subject to the default guard. On non-flat frameworks only stable semantics
/// is supported and closedness is always required.
bool check_extension(const Abaf& abaf, const IdSet& s, Semantics sigma, bool nonflat_stable = false);

/// Brute-force reference enumeration, canonically ordered.
Family enumerate_extensions(const Abaf& abaf, Semantics sigma, bool nonflat_stable = false,
                            std::size_t guard = default_guard());

/// The sub-framework induced by an atom-closed sentence set.
SubAbaf projection(const Abaf& abaf, const IdSet& sentences);

/// True iff no assumption outside `u` occurs in a derivation of the contrary
/// of a member of `u`.
bool is_uninfluenced(const Abaf& abaf, const IdSet& u);

/// Smallest atom-closed superset of `s` containing the body of every rule whose
/// head it contains, i.e. the least splitting set including `s`.
IdSet dependency_closure(const Abaf& abaf, const IdSet& s);

}  // namespace splitkit
