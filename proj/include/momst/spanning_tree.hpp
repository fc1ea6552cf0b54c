// Spanning trees with an adjacency index for tree-path queries, plus the
// two randomized primitives every algorithm here is built from: the
// cycle-breaking edge insertion and uniform spanning-tree sampling.
#pragma once

#include <vector>

#include "momst/graph.hpp"
#include "momst/rng.hpp"

namespace momst {

class SpanningTree {
 public:
  SpanningTree() = default;

  // Builds from n-1 edge ids and validates that they span the graph
  // (connected, acyclic, all ids distinct). Throws UsageError otherwise.
  static SpanningTree of_edges(const Graph& g, std::vector<EdgeId> ids);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_graph_edges() const { return static_cast<int>(member_.size()); }
  bool contains(EdgeId e) const { return member_[e] != 0; }

  // Always in ascending id order, so iteration (and in particular weight
  // summation) depends only on the edge set, never on mutation history.
  const std::vector<EdgeId>& edge_ids() const { return ids_; }
  std::vector<EdgeId> sorted_edge_ids() const;

  const std::vector<IncidentEdge>& neighbors(int v) const { return adj_[v]; }

  // Edge ids on the unique tree path between u and v (u != v), appended to
  // `out` in path order starting at u. `out` is cleared first.
  void path_edges(int u, int v, std::vector<EdgeId>& out) const;

  // Replaces tree edge `out_id` by non-tree edge `in_id`. No validity
  // checks; callers guarantee the exchange keeps the tree spanning.
  void exchange(const Graph& g, EdgeId out_id, EdgeId in_id);

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
    return a.member_ == b.member_;
  }

 private:
  std::vector<EdgeId> ids_;               // the n-1 tree edges
  std::vector<char> member_;              // edge id -> in tree?
  std::vector<std::vector<IncidentEdge>> adj_;  // tree adjacency
};

WeightVec tree_weight(const Graph& g, const SpanningTree& t);

// True iff `ids` is a spanning tree of g (n-1 distinct edges, connected).
bool is_spanning_tree(const Graph& g, const std::vector<EdgeId>& ids);

// Inserts edge e into the tree and removes one edge drawn uniformly at
// random from the unique cycle this closes (the inserted edge itself is
// part of the cycle, so the tree may come back unchanged). Inserting an
// edge already in the tree is a no-op.
void insert_and_break_cycle_in_place(const Graph& g, SpanningTree& t,
                                     EdgeId e, Rng& rng);
SpanningTree insert_and_break_cycle(const Graph& g, SpanningTree t, EdgeId e,
                                    Rng& rng);

// Uniformly random spanning tree by the Aldous-Broder random walk: walk
// until all vertices are visited, keep each first-entrance edge.
SpanningTree random_spanning_tree(const Graph& g, Rng& rng);

}  // namespace momst
