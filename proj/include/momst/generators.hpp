// Instance generators.
//
// Constructed families (integral weights, deterministic):
//   g1 / g2   single objective, n = 0 mod 4, a = n^2: a chain of eta = n/4
//             triangles (two "upper" edges of weight 2a and one "bottom"
//             edge of weight 3a each) whose last vertex belongs to a clique
//             on n/2 vertices; clique edges weigh 4a in g1 and a in g2.
//   g1m / g2m bi-objective on the same topology: upper edges (1,2), bottom
//             edges (2,1); g1m clique edges all (k,k) with k > 2; g2m
//             distinguishes a path over the first l+1 clique vertices with
//             weight (u,u), u > 2, and gives the remaining clique edges
//             (k,k) with k > u + n + 1.
//   lollipop  single objective, n even: clique on n/2 vertices (weight 1)
//             plus a path of n/2 edges (weight 2) hanging off one vertex.
// Random geometric families (n points uniform in [0,100]^2):
//   ceg       complete graph on the points.
//   deg       Delaunay triangulation (incremental Bowyer-Watson; a
//             seed-derived jitter of magnitude 1e-9 wards off degenerate
//             point sets).
// Weight models for ceg/deg: rndrnd = both components uniform in [5,200];
// eucrnd = first component euclidean length, second uniform in [5,200].
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "momst/graph.hpp"
#include "momst/spanning_tree.hpp"

namespace momst {

enum class Family { g1, g2, lollipop, g1m, g2m, ceg, deg };
enum class WeightModel { rndrnd, eucrnd };

const char* family_name(Family f);
Family family_from_name(const std::string& name);       // UsageError if unknown
const char* weight_model_name(WeightModel m);
WeightModel weight_model_from_name(const std::string&);  // UsageError if unknown

// Everything needed to (re)build one instance; `label()` is the graph tag
// used in run records ("g1-n32", "ceg-rndrnd-n25-s7", ...).
struct InstanceSpec {
  Family family = Family::g1;
  int n = 0;
  WeightModel weights = WeightModel::rndrnd;  // ceg / deg only
  int l = -1;        // g2m: path length; default n/2 - 1
  double u = 3.0;    // g2m: path weight
  double k = -1.0;   // g1m/g2m: clique weight; default 3 resp. u + n + 2
  std::uint64_t seed = 0;  // ceg / deg only
  std::string label() const;
};

// A triangle-chain instance together with its structural metadata.
struct TriangularTailed {
  Family family = Family::g1;
  int n = 0;
  int eta = 0;     // number of tail triangles (= n/4)
  double a = 0.0;  // weight unit n^2 (g1/g2; 0 for the bi-objective pair)
  double u = 0.0, k = 0.0;  // g1m/g2m weight parameters (u only for g2m)
  int l = 0;                // g2m path length
  Graph graph;
  std::vector<EdgeId> upper_edges;   // 2 per triangle
  std::vector<EdgeId> bottom_edges;  // 1 per triangle ("bad" edges)
  std::vector<EdgeId> clique_edges;
  std::vector<EdgeId> gs_edges;      // g2m only: the (u,u) path
};

TriangularTailed gen_triangular_tailed(Family f, int n);  // g1 | g2
TriangularTailed gen_triangular_tailed_mo(Family f, int n, int l = -1,
                                          double u = 3.0,
                                          double k = -1.0);  // g1m | g2m
Graph gen_lollipop(int n);
Graph gen_random(Family f, WeightModel weights, int n, std::uint64_t seed);

Graph generate(const InstanceSpec& spec);
TriangularTailed generate_tailed(const InstanceSpec& spec);
bool is_tailed_family(Family f);

// Family-level ground truth, validated against the exact oracles at small
// n by the test suite and then usable at sizes where enumeration is out of
// reach: the optimal weight for g1/g2 and the full non-dominated front
// (eta + 1 vectors, ascending first component) for g1m/g2m.
double family_mst_weight(const TriangularTailed& inst);
std::vector<WeightVec> family_pareto_front(const TriangularTailed& inst);

// Number of bottom ("bad") edges the tree uses.
int bad_edge_count(const TriangularTailed& inst, const SpanningTree& t);

// Number of (u,u) path edges the tree uses (g2m only).
int s_count(const TriangularTailed& inst, const SpanningTree& t);

}  // namespace momst
