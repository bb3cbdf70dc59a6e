#pragma once

#include "splitkit/abaf.hpp"
#include "splitkit/setaf.hpp"

namespace splitkit {

/// Instantiates a flat ABAF as a SETAF. Argument i is the i-th assumption in id
/// order and keeps its name. By default each attack tail is a minimal support
/// of the head's contrary; with `all_supports` every exact derivation leaf set
/// is emitted instead. Attacks are sorted by head, then tail.
///
/// Throws Error(kValidation) on non-flat input or when some contrary is
/// derivable from the empty set (there is no empty-tail attack).
Setaf aba_to_setaf(const Abaf& abaf, bool all_supports = false);

/// One assumption per argument (same id and name), one fresh contrary
/// `c_<name>` per argument and one rule c_h <- T per attack (T, h).
Abaf setaf_to_aba(const Setaf& sf);

/// Assumption set of `abaf` to the matching argument set of aba_to_setaf(abaf).
IdSet assumptions_to_args(const Abaf& abaf, const IdSet& assumptions);
IdSet args_to_assumptions(const Abaf& abaf, const IdSet& args);
Family args_to_assumptions(const Abaf& abaf, const Family& family);

}  // namespace splitkit
