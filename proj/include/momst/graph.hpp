// Undirected weighted graph with stable integer edge identifiers.
//
// Edge ids are the positions in the edge list (= line order in graph
// files); every ranking, selection probability and tree stores edges by
// this id, so the id assignment is part of the reproducibility contract.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "momst/weight.hpp"

namespace momst {

using EdgeId = int;

struct Edge {
  int u = -1;
  int v = -1;
  WeightVec w;
};

struct IncidentEdge {
  int to = -1;
  EdgeId edge = -1;
};

class Graph {
 public:
  // Validates: vertex indices in range, no self-loops, no duplicate edges,
  // consistent weight dimension, connected. Throws InstanceError otherwise.
  Graph(int n, int weight_dim, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int weight_dim() const { return weight_dim_; }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<IncidentEdge>& neighbors(int v) const { return adj_[v]; }

  // Largest weight component over all edges (w_max of the instance).
  double max_weight_component() const;

  // Text format, version header "momst 1":
  //   momst 1
  //   n m d
  //   u v w1 [w2]     (m lines, edge id = line order, 0-based vertices)
  static Graph read(std::istream& in);
  void write(std::ostream& out) const;
  static Graph load(const std::string& path);
  void save(const std::string& path) const;

 private:
  int n_ = 0;
  int weight_dim_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<IncidentEdge>> adj_;
};

}  // namespace momst
