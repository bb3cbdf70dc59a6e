#include "splitkit/split_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "splitkit/aba.hpp"
#include "splitkit/error.hpp"
#include "splitkit/split_setaf.hpp"

namespace splitkit {

Digraph dependency_graph(const Abaf& abaf) {
  Digraph g(abaf.atom_count());
  for (const Rule& r : abaf.rules())
    for (AtomId b : r.body) g.add_edge(b, r.head);
  for (AtomId a : abaf.assumptions()) {
    g.add_edge(a, abaf.contrary(a));
    g.add_edge(abaf.contrary(a), a);
  }
  return g;
}

std::vector<IdSet> balanced_candidates(const Condensation& c, const BalanceOptions& options) {
  bool truncated = false;
  std::vector<IdSet> ideals = enumerate_ideals(c, options.ideal_cap, &truncated);
  if (truncated) {
    std::vector<IdSet> prefixes = topological_prefixes(c);
    ideals.insert(ideals.end(), prefixes.begin(), prefixes.end());
  }
  const std::size_t total = c.component_of.size();
  if (total == 0) return {};
  const double goal = options.target * static_cast<double>(total);

  struct Scored {
    double distance;
    std::size_t size;
    IdSet nodes;
  };
  std::vector<Scored> scored;
  for (const IdSet& ideal : ideals) {
    IdSet nodes = c.nodes_of(ideal);
    if (nodes.empty() || nodes.size() == total) continue;
    scored.push_back({std::abs(static_cast<double>(nodes.size()) - goal), nodes.size(), std::move(nodes)});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& x, const Scored& y) {
    return std::tie(x.distance, x.size, x.nodes) < std::tie(y.distance, y.size, y.nodes);
  });
  scored.erase(std::unique(scored.begin(), scored.end(),
                           [](const Scored& x, const Scored& y) { return x.nodes == y.nodes; }),
               scored.end());

  std::vector<IdSet> out;
  const double slack = options.window * static_cast<double>(total) + 1e-9;
  for (const Scored& s : scored)
    if (s.distance <= slack) out.push_back(s.nodes);
  if (out.empty() && !scored.empty()) out.push_back(scored.front().nodes);
  return out;
}

IdSet find_balanced_splitting(const Abaf& abaf, const BalanceOptions& options) {
  const std::vector<IdSet> candidates = balanced_candidates(condense(dependency_graph(abaf)), options);
  if (candidates.empty()) throw Error(ErrorKind::kDegenerateSplit, "only trivial splitting sets exist");
  make_splitting(abaf, candidates.front());
  return candidates.front();
}

IdSet find_setaf_splitting(const Setaf& sf, const BalanceOptions& options) {
  const std::vector<IdSet> candidates = balanced_candidates(condense(primal_graph(sf)), options);
  if (candidates.empty()) throw Error(ErrorKind::kDegenerateSplit, "only trivial splittings exist");
  make_splitting(sf, candidates.front());
  return candidates.front();
}

namespace {

// Atoms grouped into classes closed under the assumption/contrary pairing,
// with the cut network of a quasi-splitting over those classes.
class QuasiSearch {
 public:
  QuasiSearch(const Abaf& abaf, const QuasiOptions& options) : abaf_(abaf), options_(options) {
    const std::size_t n = abaf.atom_count();
    std::vector<Id> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Id x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (AtomId a : abaf.assumptions()) parent[find(a)] = find(abaf.contrary(a));
    std::vector<Id> root_class(n, kNoId);
    class_of_.resize(n);
    for (AtomId p = 0; p < n; ++p) {
      Id r = find(p);
      if (root_class[r] == kNoId) {
        root_class[r] = static_cast<Id>(weights_.size());
        weights_.push_back(0);
      }
      class_of_[p] = root_class[r];
      ++weights_[class_of_[p]];
    }

    std::vector<char> is_head(n, 0);
    for (const Rule& r : abaf.rules()) is_head[r.head] = 1;
    // Hard constraints: a head on the bottom side pulls its non-assumption body
    // along. Each potentially vulnerable assumption gets one unit-capacity arc
    // shared by all rules that could expose it.
    std::vector<std::vector<Id>> exposing(n);
    for (const Rule& r : abaf.rules()) {
      for (AtomId b : r.body) {
        if (!abaf.is_assumption(b)) {
          hard_.emplace_back(class_of_[r.head], class_of_[b]);
        } else if (is_head[abaf.contrary(b)] && class_of_[b] != class_of_[r.head]) {
          exposing[b].push_back(class_of_[r.head]);
        }
      }
    }
    for (AtomId b = 0; b < n; ++b)
      if (!exposing[b].empty()) vulnerable_.push_back({class_of_[b], std::move(exposing[b])});
  }

  std::size_t class_count() const { return weights_.size(); }

  IdSet atoms_of(const std::vector<char>& side) const {
    std::vector<AtomId> out;
    for (AtomId p = 0; p < class_of_.size(); ++p)
      if (side[class_of_[p]]) out.push_back(p);
    return IdSet(std::move(out));
  }

  bool search() {
    std::vector<signed char> forced(class_count(), 0);
    branch(forced);
    return found_;
  }

  const IdSet& best() const { return best_; }

 private:
  struct Cut {
    std::int64_t value;
    std::vector<char> min_side;
    std::vector<char> max_side;
  };

  Cut solve(const std::vector<signed char>& forced) const {
    const Id c = static_cast<Id>(class_count());
    const Id aux0 = c;
    const Id source = aux0 + static_cast<Id>(vulnerable_.size());
    const Id sink = source + 1;
    MaxFlow flow(sink + 1);
    for (auto [from, to] : hard_) flow.add_edge(from, to, MaxFlow::kInfinity);
    for (std::size_t i = 0; i < vulnerable_.size(); ++i) {
      for (Id h : vulnerable_[i].heads) flow.add_edge(h, aux0 + static_cast<Id>(i), MaxFlow::kInfinity);
      flow.add_edge(aux0 + static_cast<Id>(i), vulnerable_[i].cls, 1);
    }
    for (Id k = 0; k < c; ++k) {
      if (forced[k] > 0) flow.add_edge(source, k, MaxFlow::kInfinity);
      if (forced[k] < 0) flow.add_edge(k, sink, MaxFlow::kInfinity);
    }
    Cut cut;
    cut.value = flow.run(source, sink);
    auto lo = flow.minimal_source_side(source);
    auto hi = flow.maximal_source_side(sink);
    cut.min_side.assign(lo.begin(), lo.begin() + c);
    cut.max_side.assign(hi.begin(), hi.begin() + c);
    return cut;
  }

  std::size_t weight(const std::vector<char>& side) const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < side.size(); ++k)
      if (side[k]) w += weights_[k];
    return w;
  }

  bool acceptable(const std::vector<char>& side) const {
    const std::size_t w = weight(side);
    const double n = static_cast<double>(abaf_.atom_count());
    return w > 0 && w < abaf_.atom_count() && w >= options_.low * n - 1e-9 && w <= options_.high * n + 1e-9;
  }

  void consider(std::int64_t value, const std::vector<char>& side) {
    IdSet atoms = atoms_of(side);
    if (!found_ || value < best_value_ || (value == best_value_ && atoms < best_)) {
      found_ = true;
      best_value_ = value;
      best_ = std::move(atoms);
    }
  }

  void branch(std::vector<signed char>& forced) {
    if (++nodes_ > options_.node_budget) return;
    Cut cut = solve(forced);
    if (cut.value >= MaxFlow::kInfinity) return;
    if (found_ && cut.value >= best_value_) return;
    bool hit = false;
    for (const auto* side : {&cut.min_side, &cut.max_side})
      if (acceptable(*side)) {
        consider(cut.value, *side);
        hit = true;
      }
    if (hit) return;

    const double n = static_cast<double>(abaf_.atom_count());
    Id pick = kNoId;
    bool in_first = true;
    auto free = [&](Id k) { return forced[k] == 0; };
    if (static_cast<double>(weight(cut.max_side)) < options_.low * n || weight(cut.max_side) == 0) {
      for (Id k = 0; k < class_count() && pick == kNoId; ++k)
        if (free(k) && !cut.max_side[k]) pick = k;
    } else if (static_cast<double>(weight(cut.min_side)) > options_.high * n ||
               weight(cut.min_side) == abaf_.atom_count()) {
      for (Id k = 0; k < class_count() && pick == kNoId; ++k)
        if (free(k) && cut.min_side[k]) {
          pick = k;
          in_first = false;
        }
    } else {
      for (Id k = 0; k < class_count() && pick == kNoId; ++k)
        if (free(k) && cut.max_side[k] && !cut.min_side[k]) pick = k;
    }
    for (Id k = 0; k < class_count() && pick == kNoId; ++k)
      if (free(k)) pick = k;
    if (pick == kNoId) return;

    for (signed char choice : {in_first ? 1 : -1, in_first ? -1 : 1}) {
      forced[pick] = choice;
      branch(forced);
      forced[pick] = 0;
    }
  }

  struct Vulnerable {
    Id cls;
    std::vector<Id> heads;
  };

  const Abaf& abaf_;
  QuasiOptions options_;
  std::vector<Id> class_of_;
  std::vector<std::size_t> weights_;
  std::vector<std::pair<Id, Id>> hard_;
  std::vector<Vulnerable> vulnerable_;
  std::size_t nodes_ = 0;
  bool found_ = false;
  std::int64_t best_value_ = 0;
  IdSet best_;
};

}  // namespace

QuasiSplitting find_quasi_splitting(const Abaf& abaf, const QuasiOptions& options) {
  QuasiSearch search(abaf, options);
  if (!search.search())
    throw Error(ErrorKind::kDegenerateSplit, "no nontrivial quasi-splitting inside the balance window");
  return make_quasi_splitting(abaf, search.best());
}

Family solve_recursive(const Abaf& abaf, Semantics sigma, std::size_t leaf_size, int max_depth) {
  if (abaf.assumptions().size() <= leaf_size || max_depth <= 0 || !splittable(sigma) || !abaf.flat())
    return enumerate_extensions(abaf, sigma);
  IdSet s;
  try {
    s = find_balanced_splitting(abaf);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateSplit) throw;
    return enumerate_extensions(abaf, sigma);
  }
  AbaSolver next = [&](const Abaf& sub, Semantics sem) {
    return solve_recursive(sub, sem, leaf_size, max_depth - 1);
  };
  return split_solve(abaf, s, sigma, next);
}

Family solve_recursive(const Setaf& sf, Semantics sigma, std::size_t leaf_size, int max_depth) {
  if (sf.arg_count() <= leaf_size || max_depth <= 0 || !splittable(sigma))
    return enumerate_extensions(sf, sigma);
  IdSet a1;
  try {
    a1 = find_setaf_splitting(sf);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateSplit) throw;
    return enumerate_extensions(sf, sigma);
  }
  SetafSolver next = [&](const Setaf& sub, Semantics sem) {
    return solve_recursive(sub, sem, leaf_size, max_depth - 1);
  };
  return split_solve(sf, a1, sigma, next);
}

}  // namespace splitkit
