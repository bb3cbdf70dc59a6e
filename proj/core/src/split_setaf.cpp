#include "splitkit/split_setaf.hpp"

#include <future>

#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"

namespace splitkit {

SetafSplitting make_splitting(const Setaf& sf, const IdSet& a1) {
  for (ArgId a : a1)
    if (a >= sf.arg_count()) throw Error(ErrorKind::kDomain, "split side mentions an unknown argument");
  SetafSplitting sp;
  sp.base = sf;
  sp.a1 = a1;
  sp.a2 = IdSet::range(static_cast<Id>(sf.arg_count())) - a1;
  const auto attacks = sf.attacks();
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    const Attack& at = attacks[i];
    if (a1.contains(at.head)) {
      if (!at.tail.is_subset_of(a1))
        throw Error(ErrorKind::kInvalidSplit, "attack " + sf.format_attack(at) + " enters the first part");
      sp.r1.push_back(i);
    } else if (at.tail.intersects(a1)) {
      sp.r3.push_back(i);
    } else {
      sp.r2.push_back(i);
    }
  }
  return sp;
}

SubSetaf first_part(const SetafSplitting& sp) { return restrict_to(sp.base, sp.a1); }

IdSet link_attacked(const SetafSplitting& sp, const IdSet& e1) {
  return range(sp.base, e1, AttackFilter::only(sp.base.attacks().size(), sp.r3)).attacked;
}

namespace {

struct ReductParts {
  IdSet kept;                 // A2'
  std::vector<Attack> attacks;  // base ids
};

ReductParts reduct_parts(const SetafSplitting& sp, const IdSet& e1) {
  ReductParts out;
  const IdSet defeated = link_attacked(sp, e1);
  out.kept = sp.a2 - defeated;
  const auto attacks = sp.base.attacks();
  for (std::size_t i : sp.r2) {
    const Attack& at = attacks[i];
    if (out.kept.contains(at.head) && at.tail.is_subset_of(out.kept)) out.attacks.push_back(at);
  }
  for (std::size_t i : sp.r3) {
    const Attack& at = attacks[i];
    IdSet outside = at.tail - sp.a1;
    if (outside.empty() || !(at.tail & sp.a1).is_subset_of(e1) || at.tail.intersects(defeated) ||
        !out.kept.contains(at.head))
      continue;
    out.attacks.push_back({std::move(outside), at.head});
  }
  return out;
}

SubSetaf localize(const Setaf& base, const IdSet& args, const std::vector<Attack>& attacks) {
  SubSetaf out;
  std::vector<ArgId> local(base.arg_count(), kNoId);
  std::vector<std::string> names;
  for (ArgId a : args) {
    local[a] = static_cast<ArgId>(names.size());
    names.push_back(base.name(a));
    out.to_base.push_back(a);
  }
  std::vector<Attack> mapped;
  for (const Attack& at : attacks) {
    std::vector<ArgId> tail;
    for (ArgId t : at.tail) tail.push_back(local[t]);
    mapped.push_back({IdSet(std::move(tail)), local[at.head]});
  }
  out.sf = Setaf(std::move(names), std::move(mapped));
  return out;
}

}  // namespace

SubSetaf reduct(const SetafSplitting& sp, const IdSet& e1) {
  ReductParts parts = reduct_parts(sp, e1);
  return localize(sp.base, parts.kept, parts.attacks);
}

std::vector<Attack> undecided_links(const SetafSplitting& sp, const IdSet& e1) {
  const std::size_t m = sp.base.attacks().size();
  std::vector<std::size_t> r13 = sp.r1;
  r13.insert(r13.end(), sp.r3.begin(), sp.r3.end());
  const IdSet attacked = range(sp.base, e1, AttackFilter::only(m, r13)).attacked;
  const IdSet undecided = sp.a1 - range(sp.base, e1, AttackFilter::only(m, sp.r1)).range;
  std::vector<Attack> out;
  for (std::size_t i : sp.r3) {
    const Attack& at = sp.base.attacks()[i];
    if (!at.tail.intersects(attacked) && at.tail.intersects(undecided)) out.push_back(at);
  }
  return out;
}

SubSetaf modification(const SetafSplitting& sp, const IdSet& e1) {
  ReductParts parts = reduct_parts(sp, e1);
  for (const Attack& at : undecided_links(sp, e1)) {
    if (!parts.kept.contains(at.head)) continue;
    IdSet tail = at.tail & parts.kept;
    tail.insert(at.head);
    parts.attacks.push_back({std::move(tail), at.head});
  }
  return localize(sp.base, parts.kept, parts.attacks);
}

Family setaf_oracle(const Setaf& sf, Semantics sigma) { return enumerate_extensions(sf, sigma); }

Family split_solve(const Setaf& sf, const IdSet& a1, Semantics sigma, const SetafSolver& solver,
                   SplitSolveOptions options) {
  return split_solve(make_splitting(sf, a1), sigma, solver, options);
}

Family split_solve(const SetafSplitting& sp, Semantics sigma, const SetafSolver& solver,
                   SplitSolveOptions options) {
  if (!splittable(sigma))
    throw Error(ErrorKind::kDomain, "split solving is not defined for conflict-free sets");
  const SubSetaf bottom = first_part(sp);
  Family firsts;
  for (const IdSet& e : solver(bottom.sf, sigma)) firsts.push_back(bottom.lift(e));

  auto solve_top = [&](const IdSet& e1) {
    SubSetaf top = modification(sp, e1);
    Family combined;
    for (const IdSet& e2 : solver(top.sf, sigma)) combined.push_back(e1 | top.lift(e2));
    return combined;
  };

  Family out;
  if (options.parallel && firsts.size() > 1) {
    std::vector<std::future<Family>> pending;
    for (const IdSet& e1 : firsts) pending.push_back(std::async(std::launch::async, solve_top, e1));
    for (auto& f : pending) {
      Family part = f.get();
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    for (const IdSet& e1 : firsts) {
      Family part = solve_top(e1);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  canonicalize(out);
  return out;
}

}  // namespace splitkit
