#include "splitkit/aba.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "splitkit/error.hpp"

namespace splitkit {

namespace {

// Inserts `s` into an antichain unless a subset is already present; drops
// supersets of `s`. Returns true if the antichain changed.
bool add_minimal(Family& antichain, const IdSet& s) {
  for (const IdSet& t : antichain)
    if (t.is_subset_of(s)) return false;
  std::erase_if(antichain, [&](const IdSet& t) { return s.is_subset_of(t); });
  antichain.push_back(s);
  return true;
}

void require_assumptions(const Abaf& abaf, const IdSet& s) {
  for (AtomId p : s)
    if (p >= abaf.atom_count() || !abaf.is_assumption(p))
      throw Error(ErrorKind::kDomain, "set member " +
                                          (p < abaf.atom_count() ? abaf.name(p) : std::to_string(p)) +
                                          " is not an assumption");
}

void check_guard(std::size_t count, std::size_t guard) {
  if (count > guard)
    throw Error(ErrorKind::kGuardExceeded, "enumeration over " + std::to_string(count) +
                                               " elements exceeds the guard of " + std::to_string(guard));
}

// Bitmask evaluation over the assumptions of one framework. Attacks are read
// off the forward-chaining closure; defence quantifies over minimal supports.
class Evaluator {
 public:
  explicit Evaluator(const Abaf& abaf)
      : abaf_(abaf),
        members_(abaf.assumptions().begin(), abaf.assumptions().end()),
        missing_(abaf.rules().size()),
        in_(abaf.atom_count()) {
    if (!abaf.flat()) return;
    SupportTable table = minimal_supports(abaf);
    attackers_.resize(members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (const IdSet& t : table.supports(abaf.contrary(members_[i])))
        attackers_[i].push_back(mask_of(t, abaf.assumption_positions()));
  }

  std::size_t size() const { return members_.size(); }

  // Closure of `s`; fills in_. Returns the assumptions derived.
  Mask close(Mask s) {
    std::fill(in_.begin(), in_.end(), 0);
    stack_.clear();
    const auto rules = abaf_.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      missing_[i] = static_cast<int>(rules[i].body.size());
      if (missing_[i] == 0) push(rules[i].head);
    }
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (s >> i & 1U) push(members_[i]);
    while (!stack_.empty()) {
      AtomId p = stack_.back();
      stack_.pop_back();
      for (std::size_t r : abaf_.rules_using(p))
        if (--missing_[r] == 0) push(rules[r].head);
    }
    Mask derived = 0;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (in_[members_[i]]) derived |= Mask{1} << i;
    return derived;
  }

  Mask attacked(Mask s) {
    close(s);
    Mask out = 0;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (in_[abaf_.contrary(members_[i])]) out |= Mask{1} << i;
    return out;
  }

  bool defends(Mask attacked_by_s, std::size_t i) const {
    for (Mask t : attackers_[i])
      if ((t & attacked_by_s) == 0) return false;
    return true;
  }

  bool accepts(Mask s, Semantics sigma, bool closed_required) {
    Mask closure_members = close(s);
    Mask att = 0;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (in_[abaf_.contrary(members_[i])]) att |= Mask{1} << i;
    if (att & s) return false;
    if (closed_required && closure_members != s) return false;
    switch (sigma) {
      case Semantics::kConflictFree:
        return true;
      case Semantics::kStable:
        return (s | att) == full();
      case Semantics::kAdmissible:
      case Semantics::kComplete:
      case Semantics::kGrounded:
      case Semantics::kPreferred:
        break;
    }
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (s >> i & 1U && !defends(att, i)) return false;
    if (sigma == Semantics::kAdmissible) return true;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (!(s >> i & 1U) && defends(att, i)) return false;
    return true;
  }

  Mask full() const { return members_.size() == 64 ? ~Mask{0} : (Mask{1} << members_.size()) - 1; }
  std::span<const Id> members() const { return members_; }

 private:
  void push(AtomId p) {
    if (!in_[p]) {
      in_[p] = 1;
      stack_.push_back(p);
    }
  }

  const Abaf& abaf_;
  std::vector<Id> members_;
  std::vector<std::vector<Mask>> attackers_;
  std::vector<int> missing_;
  std::vector<char> in_;
  std::vector<AtomId> stack_;
};

// Keeps the subset-minimal (or maximal) members of a family of masks.
std::vector<Mask> extremal(const std::vector<Mask>& family, bool minimal) {
  std::vector<Mask> out;
  for (Mask m : family) {
    bool dominated = false;
    for (Mask o : family) {
      if (o == m) continue;
      if (minimal ? (o & m) == o : (o & m) == m) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace

ValidationReport validate(const Abaf& abaf) {
  ValidationReport report;
  report.flat = abaf.flat();
  IdSet derivable = theory_closure(abaf, abaf.assumptions());
  const auto rules = abaf.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (!rules[i].body.is_subset_of(derivable)) report.dummy_rules.push_back(i);
    if (abaf.is_assumption(rules[i].head)) report.non_flat_rules.push_back(i);
  }
  return report;
}

Abaf without_rules(const Abaf& abaf, std::span<const std::size_t> drop) {
  AbafBuilder b;
  for (AtomId p = 0; p < abaf.atom_count(); ++p) b.add_atom(abaf.name(p));
  for (AtomId a : abaf.assumptions()) b.add_assumption(a, abaf.contrary(a));
  const auto rules = abaf.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) b.add_rule(rules[i].head, rules[i].body);
  return b.build();
}

IdSet theory_closure(const Abaf& abaf, const IdSet& s, const RuleFilter& filter) {
  const auto rules = abaf.rules();
  std::vector<char> in(abaf.atom_count(), 0);
  std::vector<int> missing(rules.size());
  std::vector<AtomId> stack;
  auto push = [&](AtomId p) {
    if (!in[p]) {
      in[p] = 1;
      stack.push_back(p);
    }
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    missing[i] = static_cast<int>(rules[i].body.size());
    if (missing[i] == 0 && filter.allows(i)) push(rules[i].head);
  }
  for (AtomId p : s) push(p);
  while (!stack.empty()) {
    AtomId p = stack.back();
    stack.pop_back();
    for (std::size_t r : abaf.rules_using(p))
      if (--missing[r] == 0 && filter.allows(r)) push(rules[r].head);
  }
  std::vector<AtomId> out;
  for (AtomId p = 0; p < in.size(); ++p)
    if (in[p]) out.push_back(p);
  return IdSet(std::move(out));
}

SupportTable minimal_supports(const Abaf& abaf) {
  std::vector<Family> sup(abaf.atom_count());
  for (AtomId a : abaf.assumptions()) sup[a].push_back(IdSet{a});

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : abaf.rules()) {
      Family combos{IdSet{}};
      for (AtomId b : r.body) {
        Family next;
        for (const IdSet& c : combos)
          for (const IdSet& t : sup[b]) add_minimal(next, c | t);
        combos = std::move(next);
        if (combos.empty()) break;
      }
      for (const IdSet& c : combos) changed |= add_minimal(sup[r.head], c);
    }
  }
  for (Family& f : sup) canonicalize(f);
  return SupportTable(std::move(sup));
}

SupportTable derivation_leaf_sets(const Abaf& abaf, std::size_t guard) {
  check_guard(abaf.assumptions().size(), guard);
  const std::vector<Id> members(abaf.assumptions().begin(), abaf.assumptions().end());
  std::vector<std::unordered_set<Mask>> der(abaf.atom_count());
  for (AtomId a : abaf.assumptions()) der[a].insert(Mask{1} << abaf.assumption_index(a));

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : abaf.rules()) {
      std::unordered_set<Mask> combos{0};
      for (AtomId b : r.body) {
        std::unordered_set<Mask> next;
        for (Mask c : combos)
          for (Mask t : der[b]) next.insert(c | t);
        combos = std::move(next);
        if (combos.empty()) break;
      }
      for (Mask c : combos) changed |= der[r.head].insert(c).second;
    }
  }
  std::vector<Family> out(abaf.atom_count());
  for (AtomId p = 0; p < abaf.atom_count(); ++p) {
    for (Mask m : der[p]) out[p].push_back(set_of(m, members));
    canonicalize(out[p]);
  }
  return SupportTable(std::move(out));
}

RangeResult range(const Abaf& abaf, const IdSet& s, const RuleFilter& filter) {
  require_assumptions(abaf, s);
  IdSet th = theory_closure(abaf, s, filter);
  std::vector<AtomId> attacked;
  for (AtomId a : abaf.assumptions())
    if (th.contains(abaf.contrary(a))) attacked.push_back(a);
  RangeResult out;
  out.attacked = IdSet(std::move(attacked));
  out.range = s | out.attacked;
  return out;
}

std::size_t default_guard() {
  if (const char* env = std::getenv("SPLITKIT_GUARD")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return 20;
}

bool check_extension(const Abaf& abaf, const IdSet& s, Semantics sigma, bool nonflat_stable) {
  require_assumptions(abaf, s);
  if (!abaf.flat() && sigma != Semantics::kStable)
    throw Error(ErrorKind::kValidation, "only stable semantics is supported on non-flat frameworks");
  if (sigma == Semantics::kGrounded || sigma == Semantics::kPreferred)
    return family_contains(enumerate_extensions(abaf, sigma, nonflat_stable), s);
  Evaluator ev(abaf);
  check_guard(ev.size(), 64);
  return ev.accepts(mask_of(s, abaf.assumption_positions()), sigma, nonflat_stable || !abaf.flat());
}

Family enumerate_extensions(const Abaf& abaf, Semantics sigma, bool nonflat_stable, std::size_t guard) {
  if (!abaf.flat() && sigma != Semantics::kStable)
    throw Error(ErrorKind::kValidation, "only stable semantics is supported on non-flat frameworks");
  check_guard(abaf.assumptions().size(), std::min<std::size_t>(guard, 62));
  Evaluator ev(abaf);
  const bool closed = nonflat_stable || !abaf.flat();
  const Semantics base = (sigma == Semantics::kGrounded || sigma == Semantics::kPreferred)
                             ? Semantics::kComplete
                             : sigma;
  std::vector<Mask> found;
  const Mask end = Mask{1} << ev.size();
  for (Mask m = 0; m < end; ++m)
    if (ev.accepts(m, base, closed)) found.push_back(m);
  if (sigma == Semantics::kGrounded) found = extremal(found, true);
  if (sigma == Semantics::kPreferred) found = extremal(found, false);

  Family out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(set_of(m, ev.members()));
  canonicalize(out);
  return out;
}

SubAbaf projection(const Abaf& abaf, const IdSet& sentences) {
  if (abaf.atom_closure(sentences) != sentences)
    throw Error(ErrorKind::kDomain, "projection target is not closed under assumption/contrary pairing");
  SubAbaf out;
  std::vector<AtomId> local(abaf.atom_count(), kNoId);
  AbafBuilder b;
  for (AtomId p : sentences) {
    local[p] = b.add_atom(abaf.name(p));
    out.to_base.push_back(p);
  }
  for (AtomId p : sentences)
    if (abaf.is_assumption(p)) b.add_assumption(local[p], local[abaf.contrary(p)]);
  for (const Rule& r : abaf.rules()) {
    if (!sentences.contains(r.head) || !r.body.is_subset_of(sentences)) continue;
    std::vector<AtomId> body;
    for (AtomId q : r.body) body.push_back(local[q]);
    b.add_rule(local[r.head], IdSet(std::move(body)));
  }
  out.abaf = b.build();
  return out;
}

bool is_uninfluenced(const Abaf& abaf, const IdSet& u) {
  require_assumptions(abaf, u);
  const IdSet derivable = theory_closure(abaf, abaf.assumptions());
  std::vector<char> seen(abaf.atom_count(), 0);
  std::vector<AtomId> stack;
  for (AtomId b : u) {
    AtomId c = abaf.contrary(b);
    if (!seen[c]) {
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  // Heads to rules: walk backwards through rules that can fire at all.
  std::vector<std::vector<std::size_t>> by_head(abaf.atom_count());
  const auto rules = abaf.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (rules[i].body.is_subset_of(derivable)) by_head[rules[i].head].push_back(i);
  while (!stack.empty()) {
    AtomId q = stack.back();
    stack.pop_back();
    if (abaf.is_assumption(q) && !u.contains(q)) return false;
    for (std::size_t r : by_head[q])
      for (AtomId b : rules[r].body)
        if (!seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
  }
  return true;
}

IdSet dependency_closure(const Abaf& abaf, const IdSet& s) {
  IdSet current = abaf.atom_closure(s);
  for (;;) {
    IdSet next = current;
    for (const Rule& r : abaf.rules())
      if (current.contains(r.head)) next |= r.body;
    next = abaf.atom_closure(next);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace splitkit
