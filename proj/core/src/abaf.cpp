#include "splitkit/abaf.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "splitkit/error.hpp"

namespace splitkit {

std::optional<AtomId> Abaf::find(std::string_view name) const {
  for (AtomId p = 0; p < names_.size(); ++p)
    if (names_[p] == name) return p;
  return std::nullopt;
}

AtomId Abaf::contrary(AtomId a) const {
  if (a >= names_.size() || !is_assumption(a))
    throw Error(ErrorKind::kDomain, "contrary requested for non-assumption atom " +
                                        (a < names_.size() ? names_[a] : std::to_string(a)));
  return contrary_[a];
}

IdSet Abaf::contraries(const IdSet& s) const {
  std::vector<AtomId> out;
  out.reserve(s.size());
  for (AtomId a : s) out.push_back(contrary(a));
  return IdSet(std::move(out));
}

IdSet Abaf::atom_closure(const IdSet& s) const {
  std::vector<char> in(atom_count(), 0);
  std::deque<AtomId> work(s.begin(), s.end());
  for (AtomId p : s) in[p] = 1;
  auto push = [&](AtomId q) {
    if (!in[q]) {
      in[q] = 1;
      work.push_back(q);
    }
  };
  while (!work.empty()) {
    AtomId p = work.front();
    work.pop_front();
    if (is_assumption(p)) push(contrary_[p]);
    for (AtomId a : inverse_[p]) push(a);
  }
  std::vector<AtomId> out;
  for (AtomId p = 0; p < in.size(); ++p)
    if (in[p]) out.push_back(p);
  return IdSet(std::move(out));
}

std::string Abaf::format_rule(const Rule& r) const {
  std::string out = names_[r.head] + " <-";
  bool first = true;
  for (AtomId b : r.body) {
    out += first ? " " : ",";
    out += names_[b];
    first = false;
  }
  return out;
}

AtomId AbafBuilder::add_atom(std::string name) {
  auto id = static_cast<AtomId>(names_.size());
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  contrary_.push_back(kNoId);
  assumption_.push_back(0);
  return id;
}

AtomId AbafBuilder::atom(std::string_view name) {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) return it->second;
  return add_atom(std::string(name));
}

std::string AbafBuilder::fresh_name(std::string_view base) const {
  std::string candidate(base);
  for (int i = 1; by_name_.count(candidate); ++i) candidate = std::string(base) + "_" + std::to_string(i);
  return candidate;
}

void AbafBuilder::add_assumption(AtomId a, AtomId contrary) {
  if (a >= names_.size() || contrary >= names_.size())
    throw Error(ErrorKind::kDomain, "assumption or contrary id out of range");
  if (assumption_[a] && contrary_[a] != kNoId && contrary_[a] != contrary)
    throw Error(ErrorKind::kValidation, "assumption " + names_[a] + " has two contraries");
  assumption_[a] = 1;
  contrary_[a] = contrary;
}

void AbafBuilder::add_assumption(std::string_view a, std::string_view contrary) {
  AtomId x = atom(a);
  AtomId c = atom(contrary);
  add_assumption(x, c);
}

void AbafBuilder::add_rule(AtomId head, IdSet body) {
  if (head >= names_.size() || (!body.empty() && body.ids().back() >= names_.size()))
    throw Error(ErrorKind::kDomain, "rule mentions an unknown atom");
  rules_.push_back(Rule{head, std::move(body)});
}

void AbafBuilder::add_rule(std::string_view head, std::initializer_list<std::string_view> body) {
  AtomId h = atom(head);
  std::vector<AtomId> b;
  for (auto name : body) b.push_back(atom(name));
  add_rule(h, IdSet(std::move(b)));
}

Abaf AbafBuilder::build() const {
  Abaf f;
  const std::size_t n = names_.size();
  f.names_ = names_;
  f.position_.assign(n, -1);
  f.contrary_.assign(n, kNoId);
  f.inverse_.assign(n, {});
  f.occurrences_.assign(n, {});

  std::vector<AtomId> assumptions;
  for (AtomId p = 0; p < n; ++p) {
    if (!assumption_[p]) continue;
    if (contrary_[p] == kNoId)
      throw Error(ErrorKind::kValidation, "assumption " + names_[p] + " has no contrary");
    assumptions.push_back(p);
  }
  f.assumptions_ = IdSet(assumptions);
  int pos = 0;
  for (AtomId a : f.assumptions_) {
    f.position_[a] = pos++;
    f.contrary_[a] = contrary_[a];
    f.inverse_[contrary_[a]].push_back(a);
  }

  std::set<Rule> seen;
  for (const Rule& r : rules_) {
    if (!seen.insert(r).second) continue;
    f.rules_.push_back(r);
  }
  for (std::size_t i = 0; i < f.rules_.size(); ++i) {
    const Rule& r = f.rules_[i];
    if (f.position_[r.head] >= 0) f.flat_ = false;
    for (AtomId b : r.body) f.occurrences_[b].push_back(i);
  }
  return f;
}

IdSet SubAbaf::lift(const IdSet& local) const {
  std::vector<AtomId> out;
  for (AtomId p : local)
    if (to_base[p] != kNoId) out.push_back(to_base[p]);
  return IdSet(std::move(out));
}

IdSet SubAbaf::lower(const IdSet& base) const {
  std::vector<AtomId> out;
  for (AtomId p = 0; p < to_base.size(); ++p)
    if (to_base[p] != kNoId && base.contains(to_base[p])) out.push_back(p);
  return IdSet(std::move(out));
}

}  // namespace splitkit
