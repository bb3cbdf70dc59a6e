#pragma once

#include <cstddef>
#include <vector>

#include "splitkit/abaf.hpp"
#include "splitkit/digraph.hpp"
#include "splitkit/semantics.hpp"
#include "splitkit/setaf.hpp"
#include "splitkit/split_aba.hpp"

namespace splitkit {

/// Edge b->h for every body atom b of a rule with head h, and a<->contrary(a)
/// for every assumption a.
Digraph dependency_graph(const Abaf& abaf);

inline Condensation condensation(const Digraph& g) { return condense(g); }

struct BalanceOptions {
  /// Desired share of nodes on the bottom side.
  double target = 0.5;
  /// Candidates are the ideals whose share lies within target ± window.
  double window = 0.25;
  /// Ideal enumeration stops here; topological prefixes are added then.
  std::size_t ideal_cap = 1 << 14;
};

/// Nontrivial bottoms (node sets of predecessor-closed SCC sets), best first:
/// closeness to the target share, then size, then lexicographic order. Those
/// inside the window come first; if none is, the single best one is returned.
std::vector<IdSet> balanced_candidates(const Condensation& c, const BalanceOptions& options = {});

/// Best balanced splitting set, validated. Throws Error(kDegenerateSplit) when
/// only the trivial splittings exist.
IdSet find_balanced_splitting(const Abaf& abaf, const BalanceOptions& options = {});

/// SETAF analogue over the primal graph; returns A1.
IdSet find_setaf_splitting(const Setaf& sf, const BalanceOptions& options = {});

struct QuasiOptions {
  /// Admissible share of atoms on the bottom side.
  double low = 0.25;
  double high = 0.75;
  /// Branch-and-bound node limit; the best split found so far is returned.
  std::size_t node_budget = 20000;
};

/// Quasi-splitting with the fewest vulnerabilities among the nontrivial
/// atom-closed sets inside the window, via minimum cuts on the graph with
/// assumption/contrary classes contracted. Throws Error(kDegenerateSplit) if no
/// set qualifies.
QuasiSplitting find_quasi_splitting(const Abaf& abaf, const QuasiOptions& options = {});

/// Solves by splitting along balanced splits until frameworks have at most
/// `leaf_size` assumptions (or arguments), then enumerates.
Family solve_recursive(const Abaf& abaf, Semantics sigma, std::size_t leaf_size = 8, int max_depth = 16);
Family solve_recursive(const Setaf& sf, Semantics sigma, std::size_t leaf_size = 8, int max_depth = 16);

}  // namespace splitkit
