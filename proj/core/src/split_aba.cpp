#include "splitkit/split_aba.hpp"

#include <future>

#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"

namespace splitkit {

namespace {

// Incremental construction of a framework over a subset of base atoms.
class Frame {
 public:
  Frame(const Abaf& base, const IdSet& atoms) : local_(base.atom_count(), kNoId) {
    for (AtomId p : atoms) {
      local_[p] = builder_.add_atom(base.name(p));
      to_base_.push_back(p);
    }
    for (AtomId p : atoms)
      if (base.is_assumption(p) && atoms.contains(base.contrary(p)))
        builder_.add_assumption(local_[p], local_[base.contrary(p)]);
  }

  AtomId local(AtomId base_id) const { return local_[base_id]; }
  IdSet map(const IdSet& base_ids) const {
    std::vector<AtomId> out;
    for (AtomId p : base_ids)
      if (local_[p] != kNoId) out.push_back(local_[p]);
    return IdSet(std::move(out));
  }
  AtomId fresh(const std::string& name) {
    to_base_.push_back(kNoId);
    return builder_.add_atom(builder_.fresh_name(name));
  }
  AbafBuilder& builder() { return builder_; }
  SubAbaf finish() const { return SubAbaf{builder_.build(), to_base_}; }

 private:
  AbafBuilder builder_;
  std::vector<AtomId> local_;
  std::vector<AtomId> to_base_;
};

void require_closed(const Abaf& abaf, const IdSet& s) {
  IdSet missing = abaf.atom_closure(s) - s;
  if (!missing.empty())
    throw Error(ErrorKind::kInvalidSplit,
                "split set is not atom-closed: " + abaf.name(missing.front()) + " is missing");
}

// Rules of r2 kept by the reduct, with bodies cut down to the top's atoms.
void add_reduct_rules(Frame& frame, const Abaf& base, const IdSet& s, const IdSet& theory,
                      const std::vector<std::size_t>& r2) {
  for (std::size_t i : r2) {
    const Rule& r = base.rules()[i];
    if (!(r.body & s).is_subset_of(theory)) continue;
    frame.builder().add_rule(frame.local(r.head), frame.map(r.body - s));
  }
}

}  // namespace

AbaSplitting make_splitting(const Abaf& abaf, const IdSet& s) {
  for (AtomId p : s)
    if (p >= abaf.atom_count()) throw Error(ErrorKind::kDomain, "split set mentions an unknown atom");
  require_closed(abaf, s);
  AbaSplitting sp;
  sp.base = abaf;
  sp.s = s;
  sp.l2 = IdSet::range(static_cast<Id>(abaf.atom_count())) - s;
  sp.a1 = abaf.assumptions() & s;
  sp.a2 = abaf.assumptions() - s;
  const auto rules = abaf.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (s.contains(rules[i].head)) {
      if (!rules[i].body.is_subset_of(s))
        throw Error(ErrorKind::kInvalidSplit,
                    "rule " + abaf.format_rule(rules[i]) + " has its head in the split set but not its body");
      sp.r1.push_back(i);
    } else {
      sp.r2.push_back(i);
    }
  }
  sp.bottom = projection(abaf, s);
  return sp;
}

SubAbaf reduct(const AbaSplitting& sp, const IdSet& e) {
  const IdSet theory = sp.bottom.lift(theory_closure(sp.bottom.abaf, sp.bottom.lower(e)));
  Frame frame(sp.base, sp.l2);
  add_reduct_rules(frame, sp.base, sp.s, theory, sp.r2);
  return frame.finish();
}

UndecidedTheory undecided_theory(const Abaf& d1, const IdSet& e) {
  const IdSet theory = theory_closure(d1, e);
  std::vector<AtomId> ua, good;
  for (AtomId a : d1.assumptions()) {
    if (theory.contains(d1.contrary(a))) continue;
    good.push_back(a);
    if (!e.contains(a)) ua.push_back(a);
  }
  UndecidedTheory out;
  out.assumptions = IdSet(ua);

  // Taint propagation inside the closure of the unattacked assumptions: a head
  // is tainted once some rule fires there with a tainted body atom.
  const IdSet reachable = theory_closure(d1, IdSet(good));
  std::vector<char> tainted(d1.atom_count(), 0);
  for (AtomId a : ua) tainted[a] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : d1.rules()) {
      if (tainted[r.head] || !r.body.is_subset_of(reachable)) continue;
      for (AtomId b : r.body)
        if (tainted[b]) {
          tainted[r.head] = 1;
          changed = true;
          break;
        }
    }
  }
  std::vector<AtomId> ut;
  for (AtomId p = 0; p < d1.atom_count(); ++p)
    if (tainted[p]) ut.push_back(p);
  out.sentences = IdSet(std::move(ut));
  return out;
}

IdSet incompatible_sentences(const AbaSplitting& sp, const IdSet& e) {
  const Abaf& d1 = sp.bottom.abaf;
  const IdSet local = sp.bottom.lower(e);
  IdSet out = theory_closure(d1, range(d1, local).attacked) | d1.contraries(local);
  return sp.bottom.lift(out);
}

ModifiedTop modification(const AbaSplitting& sp, const IdSet& e, UndecidedRules selection) {
  const IdSet local = sp.bottom.lower(e);
  const UndecidedTheory und = undecided_theory(sp.bottom.abaf, local);
  if (und.assumptions.empty()) return ModifiedTop{reduct(sp, e), std::nullopt};

  const IdSet theory = sp.bottom.lift(theory_closure(sp.bottom.abaf, local));
  const IdSet ut = sp.bottom.lift(und.sentences);
  const IdSet is = incompatible_sentences(sp, e);
  Frame frame(sp.base, sp.l2);
  add_reduct_rules(frame, sp.base, sp.s, theory, sp.r2);
  const AtomId xu = frame.fresh("_u");
  const AtomId cxu = frame.fresh("_cu");
  frame.builder().add_assumption(xu, cxu);
  frame.builder().add_rule(cxu, IdSet{xu});
  for (std::size_t i : sp.r2) {
    const Rule& r = sp.base.rules()[i];
    if (!r.body.intersects(ut)) continue;
    if (selection == UndecidedRules::kIncompatibleFree ? r.body.intersects(is)
                                                       : !(r.body & sp.s).is_subset_of(theory | ut))
      continue;
    IdSet body = frame.map(r.body - sp.s);
    body.insert(xu);
    frame.builder().add_rule(frame.local(r.head), std::move(body));
  }
  return ModifiedTop{frame.finish(), std::make_pair(xu, cxu)};
}

Family aba_oracle(const Abaf& abaf, Semantics sigma) { return enumerate_extensions(abaf, sigma); }

Family split_solve(const Abaf& abaf, const IdSet& s, Semantics sigma, const AbaSolver& solver,
                   AbaSplitOptions options) {
  return split_solve(make_splitting(abaf, s), sigma, solver, options);
}

Family split_solve(const AbaSplitting& sp, Semantics sigma, const AbaSolver& solver, AbaSplitOptions options) {
  if (!splittable(sigma))
    throw Error(ErrorKind::kDomain, "split solving is not defined for conflict-free sets");
  Family firsts;
  for (const IdSet& e : solver(sp.bottom.abaf, sigma)) firsts.push_back(sp.bottom.lift(e));

  auto solve_top = [&](const IdSet& e1) {
    ModifiedTop top = modification(sp, e1, options.undecided_rules);
    Family combined;
    for (const IdSet& e2 : solver(top.top.abaf, sigma)) combined.push_back(e1 | top.top.lift(e2));
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

QuasiSplitting make_quasi_splitting(const Abaf& abaf, const IdSet& s) {
  for (AtomId p : s)
    if (p >= abaf.atom_count()) throw Error(ErrorKind::kDomain, "split set mentions an unknown atom");
  require_closed(abaf, s);
  QuasiSplitting q;
  q.base = abaf;
  q.s = s;
  std::vector<char> is_head(abaf.atom_count(), 0);
  for (const Rule& r : abaf.rules()) is_head[r.head] = 1;

  std::vector<AtomId> vulnerable;
  const auto rules = abaf.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    if (!s.contains(r.head)) {
      q.r2.push_back(i);
      continue;
    }
    q.r1.push_back(i);
    for (AtomId b : r.body) {
      if (s.contains(b)) continue;
      if (!abaf.is_assumption(b))
        throw Error(ErrorKind::kInvalidSplit, "rule " + abaf.format_rule(r) +
                                                  " has its head in the split set but a non-assumption body atom outside it");
      if (is_head[abaf.contrary(b)]) vulnerable.push_back(b);
    }
  }
  q.vulnerabilities = IdSet(std::move(vulnerable));
  q.k = q.vulnerabilities.size();
  q.l1 = s | q.vulnerabilities | abaf.contraries(q.vulnerabilities);
  return q;
}

BottomExpansion bottom_expansion(const QuasiSplitting& q) {
  const Abaf& base = q.base;
  Frame frame(base, q.l1);
  BottomExpansion x;
  for (AtomId b : q.vulnerabilities) {
    const AtomId marker = frame.fresh(base.name(b) + "'");
    const AtomId marker_contrary = frame.fresh("c_" + base.name(b) + "'");
    frame.builder().add_assumption(marker, marker_contrary);
    x.vulnerable_local.push_back(frame.local(b));
    x.marker_local.push_back(marker);
  }
  for (std::size_t i : q.r1) {
    const Rule& r = base.rules()[i];
    frame.builder().add_rule(frame.local(r.head), frame.map(r.body & q.l1));
  }
  for (std::size_t i = 0; i < x.marker_local.size(); ++i) {
    const AtomId b = q.vulnerabilities.ids()[i];
    frame.builder().add_rule(frame.local(base.contrary(b)), IdSet{x.marker_local[i]});
    // The marker's contrary was created right after the marker.
    frame.builder().add_rule(x.marker_local[i] + 1, IdSet{x.vulnerable_local[i]});
  }
  x.d1 = frame.finish();
  return x;
}

SubAbaf top_constrained(const QuasiSplitting& q, const BottomExpansion& x, const IdSet& e1) {
  const Abaf& base = q.base;
  const IdSet theory = x.d1.lift(theory_closure(x.d1.abaf, e1));
  const IdSet l2 = IdSet::range(static_cast<Id>(base.atom_count())) - q.s;
  Frame frame(base, l2);
  add_reduct_rules(frame, base, q.s, theory, q.r2);
  for (std::size_t i = 0; i < x.marker_local.size(); ++i) {
    const AtomId b = q.vulnerabilities.ids()[i];
    if (e1.contains(x.vulnerable_local[i])) frame.builder().add_rule(frame.local(b), IdSet{});
    if (e1.contains(x.marker_local[i]))
      frame.builder().add_rule(frame.local(base.contrary(b)), IdSet{frame.local(b)});
  }
  return frame.finish();
}

SubAbaf top_constrained(const QuasiSplitting& q, const IdSet& e1) {
  return top_constrained(q, bottom_expansion(q), e1);
}

IdSet bottom_witness(const QuasiSplitting& q, const BottomExpansion& x, const IdSet& e) {
  IdSet out = x.d1.lower(e & q.l1);
  for (std::size_t i = 0; i < x.marker_local.size(); ++i)
    if (!e.contains(q.vulnerabilities.ids()[i])) out.insert(x.marker_local[i]);
  return out;
}

Family param_split_solve(const Abaf& abaf, const IdSet& s, std::size_t guard) {
  return param_split_solve(make_quasi_splitting(abaf, s), guard);
}

Family param_split_solve(const QuasiSplitting& q, std::size_t guard) {
  const BottomExpansion x = bottom_expansion(q);
  Family out;
  for (const IdSet& e1 : enumerate_extensions(x.d1.abaf, Semantics::kStable, false, guard)) {
    const SubAbaf top = top_constrained(q, x, e1);
    const IdSet kept = x.d1.lift(e1) & q.s;
    for (const IdSet& e2 : enumerate_extensions(top.abaf, Semantics::kStable, true, guard))
      out.push_back(kept | top.lift(e2));
  }
  canonicalize(out);
  return out;
}

}  // namespace splitkit
