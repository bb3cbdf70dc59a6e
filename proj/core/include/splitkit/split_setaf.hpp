#pragma once

#include <functional>
#include <vector>

#include "splitkit/semantics.hpp"
#include "splitkit/setaf.hpp"

namespace splitkit {

/// A validated SETAF splitting. Attack lists hold indices into base.attacks().
/// Links (r3) are the attacks with head in A2 and a tail meeting A1.
struct SetafSplitting {
  Setaf base;
  IdSet a1;
  IdSet a2;
  std::vector<std::size_t> r1;
  std::vector<std::size_t> r2;
  std::vector<std::size_t> r3;
};

/// Throws Error(kInvalidSplit) naming an attack that enters A1 from outside.
SetafSplitting make_splitting(const Setaf& sf, const IdSet& a1);

/// SF1, the restriction to A1.
SubSetaf first_part(const SetafSplitting& sp);

/// Arguments of A2 attacked by `e1` through links.
IdSet link_attacked(const SetafSplitting& sp, const IdSet& e1);

/// The (E1, R3)-reduct of SF2.
SubSetaf reduct(const SetafSplitting& sp, const IdSet& e1);

/// Links neither attacked by `e1` nor decided: some tail member of A1 lies
/// outside the range of `e1` in SF1. Returned as base attacks.
std::vector<Attack> undecided_links(const SetafSplitting& sp, const IdSet& e1);

/// The reduct plus a set-self-attack ((T ∩ A2') ∪ {h}, h) per undecided link
/// whose head survives.
SubSetaf modification(const SetafSplitting& sp, const IdSet& e1);

using SetafSolver = std::function<Family(const Setaf&, Semantics)>;

/// Brute-force enumeration with the default guard.
Family setaf_oracle(const Setaf& sf, Semantics sigma);

struct SplitSolveOptions {
  /// Solve the per-E1 top problems on separate threads.
  bool parallel = false;
};

/// Extensions of SF assembled from sigma(SF1) and sigma of each modification.
Family split_solve(const Setaf& sf, const IdSet& a1, Semantics sigma,
                   const SetafSolver& solver = setaf_oracle, SplitSolveOptions options = {});
Family split_solve(const SetafSplitting& sp, Semantics sigma, const SetafSolver& solver = setaf_oracle,
                   SplitSolveOptions options = {});

}  // namespace splitkit
