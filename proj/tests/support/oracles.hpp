#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "splitkit/abaf.hpp"
#include "splitkit/setaf.hpp"

// Small, deliberately naive reference computations used only by tests. They
// favour restating definitions over speed.
namespace splitkit::testing {

/// Leaf sets (as assumption sets) of every derivation tree, per atom.
std::vector<std::set<IdSet>> naive_leaf_sets(const Abaf& abaf);

/// Sentences with a derivation whose leaves meet the undecided assumptions and
/// contain no assumption whose contrary follows from `e`, by scanning every
/// leaf set.
IdSet naive_undecided_sentences(const Abaf& d1, const IdSet& e);

/// Least fixpoint of the characteristic function from the empty set.
IdSet naive_grounded(const Abaf& abaf);
IdSet naive_grounded(const Setaf& sf);

/// Conflict-free, admissible and stable tests for plain Dung frameworks given
/// as attack pairs.
struct DungAf {
  std::size_t n = 0;
  std::vector<std::pair<Id, Id>> attacks;
  bool conflict_free(std::uint32_t s) const;
  bool defends(std::uint32_t s, Id a) const;
  std::vector<std::uint32_t> preferred() const;
  std::vector<std::uint32_t> stable() const;
};

/// Minimum number of vulnerabilities over all nontrivial atom-closed S with
/// low*|L| <= |S| <= high*|L| that form a quasi-splitting; nullopt if none.
std::optional<std::size_t> exhaustive_min_vulnerabilities(const Abaf& abaf, double low, double high);

/// All atom-closed sets (unions of assumption/contrary classes), including the
/// empty and the full set.
std::vector<IdSet> atom_closed_sets(const Abaf& abaf);

/// Reachability matrix by Floyd-Warshall style closure.
std::vector<std::vector<char>> transitive_closure(std::size_t n, const std::vector<std::pair<Id, Id>>& edges);

}  // namespace splitkit::testing
