// Exact reference solvers: Kruskal, exhaustive spanning-tree enumeration
// (guarded by a Kirchhoff count), the exact Pareto front, and the
// weighted-sum front approximation. The randomized algorithms are always
// judged against these.
#pragma once

#include <functional>
#include <vector>

#include "momst/graph.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

// Refuse to enumerate instances with more spanning trees than this.
inline constexpr double kEnumerationGuard = 1e6;

struct MstResult {
  SpanningTree tree;
  double weight = 0.0;
};

// Minimum spanning tree, ties broken deterministically by edge id.
// Requires weight_dim == 1.
MstResult kruskal_mst(const Graph& g);

// Kruskal under arbitrary per-edge keys (used for scalarized objectives);
// equal keys are broken by ascending edge id.
SpanningTree kruskal_by_key(const Graph& g, const std::vector<double>& key);

// Number of spanning trees via the Kirchhoff matrix-tree determinant.
double spanning_tree_count(const Graph& g);

// Calls `emit` once per spanning tree with its edge ids (ascending).
// Throws InstanceError when spanning_tree_count exceeds kEnumerationGuard.
void enumerate_spanning_trees(
    const Graph& g, const std::function<void(const std::vector<EdgeId>&)>& emit);

std::vector<std::vector<EdgeId>> all_spanning_trees(const Graph& g);

struct ParetoPoint {
  WeightVec weight;
  std::vector<EdgeId> witness;  // one tree attaining this vector
};

// All non-dominated weight vectors over every spanning tree (ascending by
// first component), one witness tree per vector. Enumeration-guarded.
// Requires weight_dim == 2.
std::vector<ParetoPoint> exact_pareto_front(const Graph& g);

struct WeightedSumFront {
  // Distinct non-dominated weight vectors found by the sweep, ascending.
  std::vector<WeightVec> front;
  // All distinct trees behind those vectors (edge ids ascending); several
  // trees may share one vector. Input for edge-share statistics.
  std::vector<std::vector<EdgeId>> trees;
  std::vector<WeightVec> tree_weights;  // parallel to `trees`
};

// Sweeps lambda = k/steps, k = 0..steps, minimizing
// lambda*w1 + (1-lambda)*w2 with Kruskal, dedupes trees by edge set and
// drops trees whose vector another collected tree strictly dominates.
// Finds supported points only. Requires weight_dim == 2.
WeightedSumFront weighted_sum_front(const Graph& g, int steps = 1000);

}  // namespace momst
