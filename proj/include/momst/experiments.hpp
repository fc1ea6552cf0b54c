// Experiment harness: edge-share estimation from weighted-sum sweeps, the
// geometric decay fit p(r) ~ beta * ((n-1)/n)^r, runtime scaling with
// log-log slope fits, and the small statistics toolbox (least squares,
// Wilcoxon signed-rank) the analyses need.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "momst/ea_single.hpp"
#include "momst/generators.hpp"
#include "momst/gsemo.hpp"
#include "momst/oracles.hpp"
#include "momst/rank_bias.hpp"

namespace momst {

struct ShareTable {
  // share[e]: fraction of the distinct non-dominated weighted-sum trees
  // containing edge e.
  std::vector<double> share;
  // p_hat[r], r = 1..m: mean share over the edges of rank r under the
  // domination ranking (a bijection, so one edge per rank). p_hat[0] unused.
  std::vector<double> p_hat;
  EdgeRanking ranking;
  int front_trees = 0;
};

ShareTable estimate_shares(const Graph& g, int steps, std::uint64_t tie_seed);

struct PmCurve {
  std::vector<double> p_hat;  // 1-based mean share per rank over instances
  std::vector<int> count;     // instances contributing to each rank
  int instances = 0;
};

// Averages estimate_shares rank-wise over `instances` instances of the
// family (instance i uses seed derive_seed(master_seed, i)).
PmCurve estimate_pm(const InstanceSpec& family, int instances, int steps,
                    std::uint64_t master_seed);

void write_pm_csv(std::ostream& out, const PmCurve& curve);
PmCurve read_pm_csv(std::istream& in);

struct RegressionFit {
  double beta = 0.0;
  double r_squared = 0.0;
  double rmse = 0.0;
  int points = 0;
};

// Least-squares fit of beta in p_hat(r) = beta * ((n-1)/n)^r.
RegressionFit fit_beta_model(const PmCurve& curve, int n);

struct LinFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};
LinFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

// One-sided Wilcoxon signed-rank test (normal approximation with tie and
// continuity corrections): p-value for the alternative "x tends to be
// smaller than y". Zero differences are dropped.
double wilcoxon_signed_rank_less(const std::vector<double>& x,
                                 const std::vector<double>& y);

enum class Algo { one_plus_one, gsemo };
const char* algo_name(Algo a);

// Default iteration budget: 10 * ceil(n^2 ln n) * (m/n) for the (1+1) EA,
// 10 * ceil(n^3 ln n) for the archive algorithm; both capped at kBudgetCap.
long long default_budget(Algo algo, int n, int m);

struct SizeStats {
  int n = 0, m = 0;
  int reps = 0, successes = 0;
  double success_rate = 0.0;
  double median_iters = 0.0, q1 = 0.0, q3 = 0.0;  // over successful runs
  bool included = false;  // success rate >= 1/2, so it enters the fit
};

struct ScalingResult {
  std::vector<SizeStats> per_size;
  double alpha = 0.0;      // slope of log(median) vs log(n)
  double intercept = 0.0;
  double r_squared = 0.0;
  int fitted_sizes = 0;
};

struct ScalingConfig {
  Algo algo = Algo::one_plus_one;
  MutationStrategy::Variant variant = MutationStrategy::Variant::uniform;
  InstanceSpec family;          // n is overridden by each entry of sizes
  std::vector<int> sizes;
  int reps = 50;
  long long budget = 0;         // 0 = auto policy
  std::uint64_t master_seed = 1;
  int threads = 0;              // 0 = hardware concurrency
};

// Runs reps runs per size concurrently (per-run derived seeds keep results
// independent of the thread count), reports per-size medians/quartiles and
// the log-log slope over sizes with success rate >= 1/2. Appends every run
// to *records when given (deterministic order).
ScalingResult runtime_scaling(const ScalingConfig& config,
                              std::vector<RunRecord>* records = nullptr);

// Builds the mutation strategy for a graph: uniform / biased / mixed, with
// the ranking basis chosen by the weight dimension.
MutationStrategy make_strategy(const Graph& g,
                               MutationStrategy::Variant variant,
                               std::uint64_t tie_seed);

}  // namespace momst
