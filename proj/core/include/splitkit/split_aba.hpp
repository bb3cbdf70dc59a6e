#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "splitkit/aba.hpp"
#include "splitkit/abaf.hpp"
#include "splitkit/semantics.hpp"

namespace splitkit {

/// A validated ABA splitting set S. Rule lists index base.rules(): r1 holds the
/// rules with head in S, r2 the rest. Assumption sets use base ids.
struct AbaSplitting {
  Abaf base;
  IdSet s;
  IdSet l2;
  IdSet a1;
  IdSet a2;
  std::vector<std::size_t> r1;
  std::vector<std::size_t> r2;
  /// D1 over S with the rules r1.
  SubAbaf bottom;
};

/// Throws Error(kInvalidSplit) when S is not atom-closed or some rule with head
/// in S has a body atom outside S.
AbaSplitting make_splitting(const Abaf& abaf, const IdSet& s);

/// The E-reduct of the top over L2 and A2. `e` is given in base ids.
SubAbaf reduct(const AbaSplitting& sp, const IdSet& e);

struct UndecidedTheory {
  IdSet assumptions;  // UA
  IdSet sentences;    // UT
};

/// UA and UT of a flat framework with respect to `e` (ids of `d1`). UT holds
/// every sentence with a derivation whose leaves avoid the assumptions attacked
/// by `e` and include an undecided one.
UndecidedTheory undecided_theory(const Abaf& d1, const IdSet& e);

/// Th of the assumptions attacked by `e` in D1, plus the contraries of `e`.
/// Base ids in and out.
IdSet incompatible_sentences(const AbaSplitting& sp, const IdSet& e);

struct ModifiedTop {
  SubAbaf top;
  /// Local ids of x_u and its contrary when undecided assumptions exist.
  std::optional<std::pair<AtomId, AtomId>> fresh_undecided;
};

/// Which top rules get an x_u variant. Both require a body atom in UT.
enum class UndecidedRules {
  /// Every bottom atom of the body follows from assumptions not attacked by
  /// `e`. Sentences derivable both from attacked and from undecided
  /// assumptions stay undecided.
  kDerivable,
  /// The body avoids the incompatible sentences. Can drop attacks that are
  /// still live through undecided assumptions, so split solving may then
  /// disagree with direct solving.
  kIncompatibleFree,
};

ModifiedTop modification(const AbaSplitting& sp, const IdSet& e,
                         UndecidedRules selection = UndecidedRules::kDerivable);

using AbaSolver = std::function<Family(const Abaf&, Semantics)>;

/// Brute-force enumeration with the default guard.
Family aba_oracle(const Abaf& abaf, Semantics sigma);

struct AbaSplitOptions {
  bool parallel = false;
  UndecidedRules undecided_rules = UndecidedRules::kDerivable;
};

Family split_solve(const Abaf& abaf, const IdSet& s, Semantics sigma, const AbaSolver& solver = aba_oracle,
                   AbaSplitOptions options = {});
Family split_solve(const AbaSplitting& sp, Semantics sigma, const AbaSolver& solver = aba_oracle,
                   AbaSplitOptions options = {});

/// A quasi-splitting: rules with head in S may use assumptions outside S
/// (vulnerabilities when their contrary heads a rule).
struct QuasiSplitting {
  Abaf base;
  IdSet s;
  IdSet vulnerabilities;
  std::size_t k = 0;
  /// S plus the vulnerabilities and their contraries.
  IdSet l1;
  std::vector<std::size_t> r1;
  std::vector<std::size_t> r2;
};

/// Throws Error(kInvalidSplit) when S is not atom-closed or a rule with head in
/// S has a non-assumption body atom outside S.
QuasiSplitting make_quasi_splitting(const Abaf& abaf, const IdSet& s);

/// The guessing bottom: rules with head in S restricted to L1, plus for each
/// vulnerability b a fresh assumption b' with contrary c_b' and the rules
/// c(b) <- b' and c_b' <- b.
struct BottomExpansion {
  SubAbaf d1;
  /// Parallel to q.vulnerabilities: local id of b and of its marker b'.
  std::vector<AtomId> vulnerable_local;
  std::vector<AtomId> marker_local;
};

BottomExpansion bottom_expansion(const QuasiSplitting& q);

/// The reduct of the top by the expansion's theory of `e1` (local ids), plus
/// b <- for each vulnerability b in `e1` and c(b) <- b for each marker b' in
/// `e1`. Possibly non-flat.
SubAbaf top_constrained(const QuasiSplitting& q, const BottomExpansion& x, const IdSet& e1);
SubAbaf top_constrained(const QuasiSplitting& q, const IdSet& e1);

/// For a stable extension E of the base (base ids), the bottom set
/// (E ∩ A1) ∪ {b' | b vulnerable, b ∉ E} in local ids of the expansion.
IdSet bottom_witness(const QuasiSplitting& q, const BottomExpansion& x, const IdSet& e);

/// Stable extensions assembled from stb of the expansion and stable (closed)
/// extensions of each constrained top.
Family param_split_solve(const Abaf& abaf, const IdSet& s, std::size_t guard = default_guard());
Family param_split_solve(const QuasiSplitting& q, std::size_t guard = default_guard());

}  // namespace splitkit
