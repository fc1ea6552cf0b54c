// (1+1) evolutionary algorithm for the single-objective minimum spanning
// tree problem: start from a uniform random spanning tree, mutate, accept
// whenever the offspring is not heavier, stop at the target weight or when
// the budget is spent.
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "momst/mutation.hpp"
#include "momst/run_record.hpp"

namespace momst {

// Iteration budgets are clamped to this hard cap.
inline constexpr long long kBudgetCap = 100'000'000;

// Called after initialization (iteration 0, accepted=true) and after every
// iteration with the surviving tree.
using AcceptObserver =
    std::function<void(long long iteration, const SpanningTree& current,
                       bool accepted)>;

// target: optimal weight to stop at; computed with Kruskal when absent.
// RunRecord.seed is left 0 (the caller owns the seed bookkeeping).
RunRecord run_one_plus_one(const Graph& g, const MutationStrategy& strategy,
                           long long budget, std::optional<double> target,
                           Rng& rng, const std::string& graph_label = "graph",
                           const AcceptObserver& observer = {});

}  // namespace momst
