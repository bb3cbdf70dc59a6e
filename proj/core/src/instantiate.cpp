#include "splitkit/instantiate.hpp"

#include <algorithm>

#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"

namespace splitkit {

Setaf aba_to_setaf(const Abaf& abaf, bool all_supports) {
  if (!abaf.flat()) throw Error(ErrorKind::kValidation, "cannot instantiate a non-flat framework");
  const SupportTable table =
      all_supports ? derivation_leaf_sets(abaf, default_guard()) : minimal_supports(abaf);

  std::vector<std::string> names;
  for (AtomId a : abaf.assumptions()) names.push_back(abaf.name(a));
  std::vector<Attack> attacks;
  for (AtomId a : abaf.assumptions()) {
    for (const IdSet& t : table.supports(abaf.contrary(a))) {
      if (t.empty())
        throw Error(ErrorKind::kValidation,
                    "contrary of " + abaf.name(a) + " is derivable without assumptions");
      attacks.push_back({assumptions_to_args(abaf, t), static_cast<ArgId>(abaf.assumption_index(a))});
    }
  }
  std::sort(attacks.begin(), attacks.end());
  return Setaf(std::move(names), std::move(attacks));
}

Abaf setaf_to_aba(const Setaf& sf) {
  AbafBuilder b;
  for (ArgId a = 0; a < sf.arg_count(); ++a) b.add_atom(sf.name(a));
  std::vector<AtomId> contrary(sf.arg_count());
  for (ArgId a = 0; a < sf.arg_count(); ++a) {
    contrary[a] = b.add_atom(b.fresh_name("c_" + sf.name(a)));
    b.add_assumption(a, contrary[a]);
  }
  for (const Attack& at : sf.attacks()) b.add_rule(contrary[at.head], at.tail);
  return b.build();
}

IdSet assumptions_to_args(const Abaf& abaf, const IdSet& assumptions) {
  std::vector<ArgId> out;
  for (AtomId a : assumptions) {
    int i = abaf.assumption_index(a);
    if (i < 0) throw Error(ErrorKind::kDomain, abaf.name(a) + " is not an assumption");
    out.push_back(static_cast<ArgId>(i));
  }
  return IdSet(std::move(out));
}

IdSet args_to_assumptions(const Abaf& abaf, const IdSet& args) {
  std::vector<AtomId> out;
  const auto members = abaf.assumptions().ids();
  for (ArgId a : args) out.push_back(members[a]);
  return IdSet(std::move(out));
}

Family args_to_assumptions(const Abaf& abaf, const Family& family) {
  Family out;
  for (const IdSet& s : family) out.push_back(args_to_assumptions(abaf, s));
  canonicalize(out);
  return out;
}

}  // namespace splitkit
