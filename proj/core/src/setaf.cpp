#include "splitkit/setaf.hpp"

#include <algorithm>
#include <set>

#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"

namespace splitkit {

Setaf::Setaf(std::vector<std::string> names, std::vector<Attack> attacks) : names_(std::move(names)) {
  by_head_.resize(names_.size());
  std::set<Attack> seen;
  for (Attack& at : attacks) {
    if (at.tail.empty()) throw Error(ErrorKind::kValidation, "attack with an empty tail");
    if (at.head >= names_.size() || at.tail.ids().back() >= names_.size())
      throw Error(ErrorKind::kDomain, "attack mentions an unknown argument");
    if (!seen.insert(at).second) continue;
    by_head_[at.head].push_back(attacks_.size());
    attacks_.push_back(std::move(at));
  }
}

Setaf Setaf::unnamed(std::size_t n, std::vector<Attack> attacks) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return Setaf(std::move(names), std::move(attacks));
}

std::optional<ArgId> Setaf::find(std::string_view name) const {
  for (ArgId a = 0; a < names_.size(); ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

std::string Setaf::format_attack(const Attack& at) const {
  std::string out = "({";
  bool first = true;
  for (ArgId t : at.tail) {
    if (!first) out += ",";
    out += names_[t];
    first = false;
  }
  return out + "}," + names_[at.head] + ")";
}

Setaf make_setaf(std::initializer_list<std::string_view> args,
                 std::initializer_list<std::pair<std::initializer_list<std::string_view>, std::string_view>> attacks) {
  std::vector<std::string> names(args.begin(), args.end());
  auto id = [&](std::string_view n) -> ArgId {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw Error(ErrorKind::kDomain, "unknown argument " + std::string(n));
    return static_cast<ArgId>(it - names.begin());
  };
  std::vector<Attack> out;
  for (const auto& [tail, head] : attacks) {
    std::vector<ArgId> t;
    for (auto n : tail) t.push_back(id(n));
    out.push_back({IdSet(std::move(t)), id(head)});
  }
  return Setaf(std::move(names), std::move(out));
}

IdSet args_by_name(const Setaf& sf, std::initializer_list<std::string_view> names) {
  std::vector<ArgId> out;
  for (auto n : names) {
    auto a = sf.find(n);
    if (!a) throw Error(ErrorKind::kDomain, "unknown argument " + std::string(n));
    out.push_back(*a);
  }
  return IdSet(std::move(out));
}

ArgRange range(const Setaf& sf, const IdSet& s, const AttackFilter& filter) {
  std::vector<ArgId> attacked;
  const auto attacks = sf.attacks();
  for (std::size_t i = 0; i < attacks.size(); ++i)
    if (filter.allows(i) && attacks[i].tail.is_subset_of(s)) attacked.push_back(attacks[i].head);
  ArgRange out;
  out.attacked = IdSet(std::move(attacked));
  out.range = s | out.attacked;
  return out;
}

namespace {

class SetafEvaluator {
 public:
  explicit SetafEvaluator(const Setaf& sf) : sf_(sf), n_(sf.arg_count()) {
    std::vector<int> identity(n_);
    for (std::size_t i = 0; i < n_; ++i) identity[i] = static_cast<int>(i);
    for (const Attack& at : sf.attacks()) {
      tails_.push_back(mask_of(at.tail, identity));
      heads_.push_back(at.head);
    }
  }

  Mask attacked(Mask s) const {
    Mask out = 0;
    for (std::size_t i = 0; i < tails_.size(); ++i)
      if ((tails_[i] & s) == tails_[i]) out |= Mask{1} << heads_[i];
    return out;
  }

  bool defends(Mask att, ArgId a) const {
    for (std::size_t i : sf_.attacks_on(a))
      if ((tails_[i] & att) == 0) return false;
    return true;
  }

  bool accepts(Mask s, Semantics sigma) const {
    Mask att = attacked(s);
    if (att & s) return false;
    if (sigma == Semantics::kConflictFree) return true;
    if (sigma == Semantics::kStable) return (s | att) == full();
    for (ArgId a = 0; a < n_; ++a)
      if (s >> a & 1U && !defends(att, a)) return false;
    if (sigma == Semantics::kAdmissible) return true;
    for (ArgId a = 0; a < n_; ++a)
      if (!(s >> a & 1U) && defends(att, a)) return false;
    return true;
  }

  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

 private:
  const Setaf& sf_;
  std::size_t n_;
  std::vector<Mask> tails_;
  std::vector<ArgId> heads_;
};

std::vector<Mask> extremal(const std::vector<Mask>& family, bool minimal) {
  std::vector<Mask> out;
  for (Mask m : family) {
    bool dominated = std::any_of(family.begin(), family.end(), [&](Mask o) {
      return o != m && (minimal ? (o & m) == o : (o & m) == m);
    });
    if (!dominated) out.push_back(m);
  }
  return out;
}

}  // namespace

bool check_extension(const Setaf& sf, const IdSet& s, Semantics sigma) {
  for (ArgId a : s)
    if (a >= sf.arg_count()) throw Error(ErrorKind::kDomain, "set member is not an argument");
  if (sigma == Semantics::kGrounded || sigma == Semantics::kPreferred)
    return family_contains(enumerate_extensions(sf, sigma), s);
  if (sf.arg_count() > 64) throw Error(ErrorKind::kGuardExceeded, "more than 64 arguments");
  std::vector<int> identity(sf.arg_count());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  return SetafEvaluator(sf).accepts(mask_of(s, identity), sigma);
}

Family enumerate_extensions(const Setaf& sf, Semantics sigma) {
  return enumerate_extensions(sf, sigma, default_guard());
}

Family enumerate_extensions(const Setaf& sf, Semantics sigma, std::size_t guard) {
  const std::size_t n = sf.arg_count();
  const std::size_t limit = std::min<std::size_t>(guard, 62);
  if (n > limit)
    throw Error(ErrorKind::kGuardExceeded, "enumeration over " + std::to_string(n) +
                                               " elements exceeds the guard of " + std::to_string(limit));
  SetafEvaluator ev(sf);
  const Semantics base = (sigma == Semantics::kGrounded || sigma == Semantics::kPreferred)
                             ? Semantics::kComplete
                             : sigma;
  std::vector<Mask> found;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (ev.accepts(m, base)) found.push_back(m);
  if (sigma == Semantics::kGrounded) found = extremal(found, true);
  if (sigma == Semantics::kPreferred) found = extremal(found, false);

  std::vector<Id> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = static_cast<Id>(i);
  Family out;
  for (Mask m : found) out.push_back(set_of(m, members));
  canonicalize(out);
  return out;
}

Digraph primal_graph(const Setaf& sf) {
  Digraph g(sf.arg_count());
  for (const Attack& at : sf.attacks())
    for (ArgId t : at.tail) g.add_edge(t, at.head);
  return g;
}

Setaf normalize(const Setaf& sf) {
  std::vector<Attack> kept;
  for (ArgId h = 0; h < sf.arg_count(); ++h) {
    const auto on = sf.attacks_on(h);
    for (std::size_t i : on) {
      const IdSet& t = sf.attacks()[i].tail;
      bool redundant = std::any_of(on.begin(), on.end(), [&](std::size_t j) {
        const IdSet& o = sf.attacks()[j].tail;
        return j != i && o.size() < t.size() && o.is_subset_of(t);
      });
      if (!redundant) kept.push_back(sf.attacks()[i]);
    }
  }
  std::sort(kept.begin(), kept.end());
  return Setaf(std::vector<std::string>(sf.names().begin(), sf.names().end()), std::move(kept));
}

IdSet SubSetaf::lift(const IdSet& local) const {
  std::vector<ArgId> out;
  for (ArgId a : local)
    if (to_base[a] != kNoId) out.push_back(to_base[a]);
  return IdSet(std::move(out));
}

IdSet SubSetaf::lower(const IdSet& base) const {
  std::vector<ArgId> out;
  for (ArgId a = 0; a < to_base.size(); ++a)
    if (to_base[a] != kNoId && base.contains(to_base[a])) out.push_back(a);
  return IdSet(std::move(out));
}

SubSetaf restrict_to(const Setaf& sf, const IdSet& args) {
  SubSetaf out;
  std::vector<ArgId> local(sf.arg_count(), kNoId);
  std::vector<std::string> names;
  for (ArgId a : args) {
    local[a] = static_cast<ArgId>(names.size());
    names.push_back(sf.name(a));
    out.to_base.push_back(a);
  }
  std::vector<Attack> attacks;
  for (const Attack& at : sf.attacks()) {
    if (!args.contains(at.head) || !at.tail.is_subset_of(args)) continue;
    std::vector<ArgId> tail;
    for (ArgId t : at.tail) tail.push_back(local[t]);
    attacks.push_back({IdSet(std::move(tail)), local[at.head]});
  }
  out.sf = Setaf(std::move(names), std::move(attacks));
  return out;
}

}  // namespace splitkit
