#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "splitkit/id_set.hpp"

namespace splitkit {

using AtomId = Id;

/// head <- body. An empty body is a fact.
struct Rule {
  AtomId head = kNoId;
  IdSet body;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule& a, const Rule& b) {
    if (auto c = a.head <=> b.head; c != 0) return c;
    return a.body <=> b.body;
  }
};

/// An assumption-based argumentation framework (L, R, A, contrary).
///
/// Atoms are dense ids 0..n-1 with display names. The contrary function is
/// total on assumptions; its inverse may be multi-valued when assumptions share
/// a contrary. Instances are immutable once built and safe to share.
class Abaf {
 public:
  Abaf() = default;

  std::size_t atom_count() const { return names_.size(); }
  const std::string& name(AtomId p) const { return names_[p]; }
  std::span<const std::string> names() const { return names_; }
  /// First atom carrying `name`, if any.
  std::optional<AtomId> find(std::string_view name) const;

  const IdSet& assumptions() const { return assumptions_; }
  bool is_assumption(AtomId p) const { return position_[p] >= 0; }
  /// Position of `p` inside assumptions(), or -1.
  int assumption_index(AtomId p) const { return position_[p]; }
  std::span<const int> assumption_positions() const { return position_; }

  /// Contrary of assumption `a`; throws a domain error for non-assumptions.
  AtomId contrary(AtomId a) const;
  /// Assumptions whose contrary is `p` (alpha, possibly several).
  std::span<const AtomId> contrary_of(AtomId p) const { return inverse_[p]; }
  IdSet contraries(const IdSet& s) const;

  std::span<const Rule> rules() const { return rules_; }
  /// Indices of rules whose body mentions `p`.
  std::span<const std::size_t> rules_using(AtomId p) const { return occurrences_[p]; }

  bool flat() const { return flat_; }

  /// atom(S) closed to a fixpoint: adds contraries of members and the
  /// assumptions whose contrary is a member.
  IdSet atom_closure(const IdSet& s) const;

  std::string format_rule(const Rule& r) const;

 private:
  friend class AbafBuilder;

  std::vector<std::string> names_;
  std::vector<Rule> rules_;
  IdSet assumptions_;
  std::vector<int> position_;
  std::vector<AtomId> contrary_;
  std::vector<std::vector<AtomId>> inverse_;
  std::vector<std::vector<std::size_t>> occurrences_;
  bool flat_ = true;
};

/// Incremental construction of an Abaf. Duplicate rules are merged.
class AbafBuilder {
 public:
  /// Always creates a fresh atom.
  AtomId add_atom(std::string name);
  /// Returns the atom named `name`, creating it on first use.
  AtomId atom(std::string_view name);
  /// Picks an unused name derived from `base`.
  std::string fresh_name(std::string_view base) const;

  void add_assumption(AtomId a, AtomId contrary);
  void add_rule(AtomId head, IdSet body);
  /// Name-based convenience used heavily by tests and examples.
  void add_rule(std::string_view head, std::initializer_list<std::string_view> body);
  void add_assumption(std::string_view a, std::string_view contrary);

  std::size_t atom_count() const { return names_.size(); }

  /// Throws Error(kValidation) if an assumption lacks a contrary.
  Abaf build() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> by_name_;
  std::vector<AtomId> contrary_;
  std::vector<char> assumption_;
  std::vector<Rule> rules_;
};

/// A framework derived from a base one, with a map from local atoms to base
/// atoms (kNoId for atoms introduced by the derivation).
struct SubAbaf {
  Abaf abaf;
  std::vector<AtomId> to_base;

  IdSet lift(const IdSet& local) const;
  /// Base ids in `base` that have a local counterpart, mapped to local ids.
  IdSet lower(const IdSet& base) const;
};

}  // namespace splitkit
