#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "splitkit/id_set.hpp"

namespace splitkit {

/// Simple directed graph over nodes 0..n-1 without parallel edges.
class Digraph {
 public:
  explicit Digraph(std::size_t n = 0) : succ_(n), pred_(n) {}

  std::size_t size() const { return succ_.size(); }
  void add_edge(Id from, Id to);
  bool has_edge(Id from, Id to) const;
  std::span<const Id> successors(Id v) const { return succ_[v]; }
  std::span<const Id> predecessors(Id v) const { return pred_[v]; }
  std::size_t edge_count() const { return edges_; }
  /// All edges, sorted.
  std::vector<std::pair<Id, Id>> edges() const;

 private:
  std::vector<std::vector<Id>> succ_;
  std::vector<std::vector<Id>> pred_;
  std::size_t edges_ = 0;
};

/// Strongly connected components contracted to a DAG. Components are numbered
/// in topological order: every dag edge goes from a lower to a higher index.
struct Condensation {
  std::vector<IdSet> sccs;
  std::vector<Id> component_of;
  std::vector<std::pair<Id, Id>> dag_edges;
  std::vector<std::size_t> weights;

  Digraph dag() const;
  /// Union of the node sets of the given components.
  IdSet nodes_of(const IdSet& components) const;
};

Condensation condense(const Digraph& g);

/// Predecessor-closed component sets (including the empty and the full one),
/// in discovery order. Stops after `cap` sets and reports truncation.
std::vector<IdSet> enumerate_ideals(const Condensation& c, std::size_t cap, bool* truncated = nullptr);

/// The ideals formed by the first i components in topological order.
std::vector<IdSet> topological_prefixes(const Condensation& c);

/// Dinic maximum flow with integer capacities.
class MaxFlow {
 public:
  static constexpr std::int64_t kInfinity = std::int64_t{1} << 40;

  explicit MaxFlow(std::size_t n) : adj_(n) {}
  void add_edge(Id from, Id to, std::int64_t capacity);
  std::int64_t run(Id source, Id sink);
  /// Nodes reachable from the source in the residual graph after run(): the
  /// source side of the inclusion-minimal minimum cut.
  std::vector<char> minimal_source_side(Id source) const;
  /// Complement of the nodes that reach the sink in the residual graph: the
  /// source side of the inclusion-maximal minimum cut.
  std::vector<char> maximal_source_side(Id sink) const;

 private:
  struct Arc {
    Id to;
    std::size_t rev;
    std::int64_t cap;
  };
  bool bfs(Id s, Id t);
  std::int64_t dfs(Id v, Id t, std::int64_t pushed);

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace splitkit
