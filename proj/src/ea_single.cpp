#include "momst/ea_single.hpp"

#include <algorithm>
#include <chrono>

#include "momst/errors.hpp"
#include "momst/oracles.hpp"

namespace momst {

RunRecord run_one_plus_one(const Graph& g, const MutationStrategy& strategy,
                           long long budget, std::optional<double> target,
                           Rng& rng, const std::string& graph_label,
                           const AcceptObserver& observer) {
  if (g.weight_dim() != 1)
    throw UsageError("the (1+1) EA expects a single-objective graph");
  if (budget < 0) throw UsageError("budget must be non-negative");
  budget = std::min(budget, kBudgetCap);
  const double goal = target ? *target : kruskal_mst(g).weight;

  const auto t0 = std::chrono::steady_clock::now();
  SpanningTree current = random_spanning_tree(g, rng);
  double weight = tree_weight(g, current)[0];
  if (observer) observer(0, current, true);

  long long iter = 0;
  bool success = weight <= goal;
  SpanningTree child;  // reused across iterations to avoid reallocation
  while (!success && iter < budget) {
    ++iter;
    child = current;
    mutate_in_place(g, child, strategy, rng);
    const double child_weight = tree_weight(g, child)[0];
    const bool accepted = child_weight <= weight;
    if (accepted) {
      std::swap(current, child);
      weight = child_weight;
    }
    if (observer) observer(iter, current, accepted);
    success = weight <= goal;
  }
  const auto t1 = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.graph = graph_label;
  rec.algo = std::string("ea-") + strategy.name();
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.iterations = iter;
  rec.success = success;
  rec.final_weight = WeightVec(weight);
  rec.budget = budget;
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rec;
}

}  // namespace momst
