#include "splitkit/digraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace splitkit {

void Digraph::add_edge(Id from, Id to) {
  if (has_edge(from, to)) return;
  succ_[from].push_back(to);
  pred_[to].push_back(from);
  ++edges_;
}

bool Digraph::has_edge(Id from, Id to) const {
  const auto& s = succ_[from];
  return std::find(s.begin(), s.end(), to) != s.end();
}

std::vector<std::pair<Id, Id>> Digraph::edges() const {
  std::vector<std::pair<Id, Id>> out;
  out.reserve(edges_);
  for (Id v = 0; v < succ_.size(); ++v)
    for (Id w : succ_[v]) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

Digraph Condensation::dag() const {
  Digraph d(sccs.size());
  for (auto [a, b] : dag_edges) d.add_edge(a, b);
  return d;
}

IdSet Condensation::nodes_of(const IdSet& components) const {
  IdSet out;
  for (Id c : components) out |= sccs[c];
  return out;
}

// Iterative Tarjan; components come out sinks first and are renumbered.
Condensation condense(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr Id kUnset = kNoId;
  std::vector<Id> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<char> on_stack(n, 0);
  std::vector<Id> stack;
  std::vector<std::vector<Id>> found;
  Id next_index = 0;

  struct Frame {
    Id v;
    std::size_t child;
  };
  std::vector<Frame> call;
  for (Id root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto succ = g.successors(f.v);
      if (f.child < succ.size()) {
        Id w = succ[f.child++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Id v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Id> members;
        Id w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          members.push_back(w);
        } while (w != v);
        found.push_back(std::move(members));
      }
    }
  }

  Condensation c;
  const std::size_t k = found.size();
  c.component_of.assign(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Id topo = static_cast<Id>(k - 1 - i);
    for (Id v : found[i]) c.component_of[v] = topo;
  }
  c.sccs.resize(k);
  c.weights.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    Id topo = static_cast<Id>(k - 1 - i);
    c.sccs[topo] = IdSet(std::move(found[i]));
    c.weights[topo] = c.sccs[topo].size();
  }
  for (auto [a, b] : g.edges()) {
    Id ca = c.component_of[a], cb = c.component_of[b];
    if (ca != cb) c.dag_edges.emplace_back(ca, cb);
  }
  std::sort(c.dag_edges.begin(), c.dag_edges.end());
  c.dag_edges.erase(std::unique(c.dag_edges.begin(), c.dag_edges.end()), c.dag_edges.end());
  return c;
}

std::vector<IdSet> enumerate_ideals(const Condensation& c, std::size_t cap, bool* truncated) {
  const std::size_t k = c.sccs.size();
  std::vector<std::vector<Id>> preds(k);
  for (auto [a, b] : c.dag_edges) preds[b].push_back(a);

  std::vector<IdSet> out;
  std::vector<char> chosen(k, 0);
  bool cut = false;
  // Components are decided in topological order, so predecessors are settled
  // before each decision.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (cut) return;
    if (i == k) {
      if (out.size() >= cap) {
        cut = true;
        return;
      }
      std::vector<Id> members;
      for (Id j = 0; j < k; ++j)
        if (chosen[j]) members.push_back(j);
      out.emplace_back(std::move(members));
      return;
    }
    self(self, i + 1);
    bool allowed = std::all_of(preds[i].begin(), preds[i].end(), [&](Id p) { return chosen[p] != 0; });
    if (allowed) {
      chosen[i] = 1;
      self(self, i + 1);
      chosen[i] = 0;
    }
  };
  recurse(recurse, 0);
  if (truncated) *truncated = cut;
  return out;
}

std::vector<IdSet> topological_prefixes(const Condensation& c) {
  std::vector<IdSet> out;
  std::vector<Id> members;
  out.emplace_back();
  for (Id i = 0; i < c.sccs.size(); ++i) {
    members.push_back(i);
    out.emplace_back(members);
  }
  return out;
}

void MaxFlow::add_edge(Id from, Id to, std::int64_t capacity) {
  adj_[from].push_back({to, adj_[to].size(), capacity});
  adj_[to].push_back({from, adj_[from].size() - 1, 0});
}

bool MaxFlow::bfs(Id s, Id t) {
  level_.assign(adj_.size(), -1);
  std::queue<Id> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Id v = q.front();
    q.pop();
    for (const Arc& a : adj_[v])
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        q.push(a.to);
      }
  }
  return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(Id v, Id t, std::int64_t pushed) {
  if (v == t) return pushed;
  for (std::size_t& i = it_[v]; i < adj_[v].size(); ++i) {
    Arc& a = adj_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
    if (got > 0) {
      a.cap -= got;
      adj_[a.to][a.rev].cap += got;
      return got;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(Id source, Id sink) {
  std::int64_t flow = 0;
  while (bfs(source, sink)) {
    it_.assign(adj_.size(), 0);
    while (std::int64_t f = dfs(source, sink, std::numeric_limits<std::int64_t>::max())) flow += f;
  }
  return flow;
}

std::vector<char> MaxFlow::minimal_source_side(Id source) const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Id> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    Id v = stack.back();
    stack.pop_back();
    for (const Arc& a : adj_[v])
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
  }
  return seen;
}

std::vector<char> MaxFlow::maximal_source_side(Id sink) const {
  // v reaches the sink in the residual graph iff some residual arc v->w exists
  // with w reaching it; walk backwards over arcs with spare capacity.
  std::vector<char> reaches(adj_.size(), 0);
  std::vector<Id> stack{sink};
  reaches[sink] = 1;
  while (!stack.empty()) {
    Id w = stack.back();
    stack.pop_back();
    for (const Arc& back : adj_[w]) {
      const Arc& forward = adj_[back.to][back.rev];
      if (forward.cap > 0 && !reaches[back.to]) {
        reaches[back.to] = 1;
        stack.push_back(back.to);
      }
    }
  }
  for (auto& r : reaches) r = !r;
  return reaches;
}

}  // namespace splitkit
