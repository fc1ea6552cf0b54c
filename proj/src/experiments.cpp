#include "momst/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "momst/errors.hpp"

namespace momst {

ShareTable estimate_shares(const Graph& g, int steps, std::uint64_t tie_seed) {
  const WeightedSumFront f = weighted_sum_front(g, steps);
  ShareTable table;
  table.front_trees = static_cast<int>(f.trees.size());
  table.share.assign(g.num_edges(), 0.0);
  for (const auto& ids : f.trees)
    for (EdgeId e : ids) table.share[e] += 1.0;
  for (double& s : table.share) s /= table.front_trees;
  table.ranking = rank_by_domination(g, tie_seed);
  // The ranking is a bijection, so "mean share at rank r" is the share of
  // the one edge holding rank r.
  table.p_hat.assign(g.num_edges() + 1, 0.0);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    table.p_hat[table.ranking.rank[e]] = table.share[e];
  return table;
}

PmCurve estimate_pm(const InstanceSpec& family, int instances, int steps,
                    std::uint64_t master_seed) {
  if (instances < 1) throw UsageError("need at least one instance");
  PmCurve curve;
  curve.instances = instances;
  for (int i = 0; i < instances; ++i) {
    InstanceSpec spec = family;
    spec.seed = derive_seed(master_seed, static_cast<std::uint64_t>(i));
    Graph g = generate(spec);
    const ShareTable t = estimate_shares(g, steps, derive_seed(spec.seed, 1));
    if (curve.p_hat.size() < t.p_hat.size()) {
      curve.p_hat.resize(t.p_hat.size(), 0.0);
      curve.count.resize(t.p_hat.size(), 0);
    }
    for (std::size_t r = 1; r < t.p_hat.size(); ++r) {
      curve.p_hat[r] += t.p_hat[r];
      curve.count[r] += 1;
    }
  }
  for (std::size_t r = 1; r < curve.p_hat.size(); ++r)
    if (curve.count[r] > 0) curve.p_hat[r] /= curve.count[r];
  return curve;
}

void write_pm_csv(std::ostream& out, const PmCurve& curve) {
  out << "rank,p_hat,count\n";
  for (std::size_t r = 1; r < curve.p_hat.size(); ++r)
    out << r << ',' << format_number(curve.p_hat[r]) << ',' << curve.count[r]
        << '\n';
}

PmCurve read_pm_csv(std::istream& in) {
  PmCurve curve;
  std::string line;
  if (!std::getline(in, line) || line.rfind("rank,", 0) != 0)
    throw InstanceError("expected a CSV header starting with 'rank,'");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    const std::size_t r = std::stoul(field);
    std::getline(row, field, ',');
    const double p = std::stod(field);
    int cnt = 1;
    if (std::getline(row, field, ',')) cnt = std::stoi(field);
    if (curve.p_hat.size() <= r) {
      curve.p_hat.resize(r + 1, 0.0);
      curve.count.resize(r + 1, 0);
    }
    curve.p_hat[r] = p;
    curve.count[r] = cnt;
    curve.instances = std::max(curve.instances, cnt);
  }
  if (curve.p_hat.size() < 2) throw InstanceError("no data rows in curve CSV");
  return curve;
}

RegressionFit fit_beta_model(const PmCurve& curve, int n) {
  if (n < 2) throw UsageError("need n >= 2");
  const double a = (n - 1) / static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, sy = 0.0;
  int points = 0;
  for (std::size_t r = 1; r < curve.p_hat.size(); ++r) {
    if (curve.count.empty() || curve.count[r] < 1) continue;
    const double x = std::pow(a, static_cast<double>(r));
    sxx += x * x;
    sxy += x * curve.p_hat[r];
    sy += curve.p_hat[r];
    ++points;
  }
  if (points < 2 || sy == 0.0)
    throw UsageError("degenerate fit: need >= 2 ranks with non-zero shares");
  RegressionFit fit;
  fit.points = points;
  fit.beta = sxy / sxx;
  const double mean = sy / points;
  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t r = 1; r < curve.p_hat.size(); ++r) {
    if (curve.count.empty() || curve.count[r] < 1) continue;
    const double x = std::pow(a, static_cast<double>(r));
    const double e = curve.p_hat[r] - fit.beta * x;
    ss_res += e * e;
    ss_tot += (curve.p_hat[r] - mean) * (curve.p_hat[r] - mean);
  }
  fit.r_squared = ss_tot == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0)
                                : 1.0 - ss_res / ss_tot;
  fit.rmse = std::sqrt(ss_res / points);
  return fit;
}

LinFit least_squares(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw UsageError("least_squares needs >= 2 paired points");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw UsageError("least_squares: x values are all equal");
  LinFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

double wilcoxon_signed_rank_less(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  if (x.size() != y.size())
    throw UsageError("wilcoxon needs paired samples of equal length");
  std::vector<double> diff;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) diff.push_back(x[i] - y[i]);
  const std::size_t n = diff.size();
  if (n == 0) return 1.0;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(diff[a]) < std::fabs(diff[b]);
  });
  std::vector<double> rank(n, 0.0);
  double tie_correction = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n &&
           std::fabs(diff[order[j]]) == std::fabs(diff[order[i]]))
      ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) rank[order[t]] = avg;
    const double ties = static_cast<double>(j - i);
    tie_correction += ties * ties * ties - ties;
    i = j;
  }
  double w_plus = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (diff[i] > 0) w_plus += rank[i];
  const double dn = static_cast<double>(n);
  const double mean = dn * (dn + 1.0) / 4.0;
  const double var =
      dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_correction / 48.0;
  if (var <= 0.0) return w_plus < mean ? 0.0 : 1.0;
  // alternative "x < y": small W+ is evidence; continuity-corrected z
  const double z = (w_plus - mean + 0.5) / std::sqrt(var);
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

const char* algo_name(Algo a) {
  return a == Algo::one_plus_one ? "ea" : "gsemo";
}

long long default_budget(Algo algo, int n, int m) {
  const double nn = static_cast<double>(n);
  const double b =
      algo == Algo::one_plus_one
          ? 10.0 * std::ceil(nn * nn * std::log(nn)) * m / nn
          : 10.0 * std::ceil(nn * nn * nn * std::log(nn));
  return std::min(static_cast<long long>(std::llround(b)), kBudgetCap);
}

MutationStrategy make_strategy(const Graph& g,
                               MutationStrategy::Variant variant,
                               std::uint64_t tie_seed) {
  if (variant == MutationStrategy::Variant::uniform)
    return MutationStrategy::uniform(g.num_edges());
  const EdgeRanking ranking = g.weight_dim() == 1
                                  ? rank_by_weight(g, tie_seed)
                                  : rank_by_domination(g, tie_seed);
  SelectionDistribution biased =
      biased_distribution(ranking, g.num_vertices());
  if (variant == MutationStrategy::Variant::biased)
    return MutationStrategy::biased(std::move(biased));
  return MutationStrategy::mixed(g.num_edges(), std::move(biased));
}

namespace {

// Quartiles by linear interpolation between order statistics.
double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * (static_cast<double>(v.size()) - 1.0);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= v.size()) return v.back();
  const double frac = pos - static_cast<double>(lo);
  return v[lo] * (1.0 - frac) + v[lo + 1] * frac;
}

struct SizeTask {
  InstanceSpec spec;
  long long budget = 0;
  std::optional<Graph> shared_graph;  // constructed families
  std::optional<MutationStrategy> shared_strategy;
  std::optional<double> shared_target;
  std::optional<std::vector<WeightVec>> shared_front;
};

}  // namespace

ScalingResult runtime_scaling(const ScalingConfig& config,
                              std::vector<RunRecord>* records) {
  if (config.sizes.empty()) throw UsageError("no sizes given");
  if (config.reps < 1) throw UsageError("need reps >= 1");
  const bool random_family =
      config.family.family == Family::ceg || config.family.family == Family::deg;
  const bool multi = config.algo == Algo::gsemo;

  ScalingResult result;
  for (std::size_t si = 0; si < config.sizes.size(); ++si) {
    SizeTask task;
    task.spec = config.family;
    task.spec.n = config.sizes[si];
    // Constructed families are deterministic: build the instance, the
    // biased ranking and the target once per size. Random families get a
    // fresh instance per repetition (built inside the job).
    if (!random_family) {
      Graph g = generate(task.spec);
      task.budget = config.budget > 0
                        ? std::min(config.budget, kBudgetCap)
                        : default_budget(config.algo, g.num_vertices(),
                                         g.num_edges());
      task.shared_strategy = make_strategy(
          g, config.variant, derive_seed(config.master_seed, 1000000 + si));
      if (multi) {
        if (is_tailed_family(task.spec.family))
          task.shared_front = family_pareto_front(generate_tailed(task.spec));
        else {
          std::vector<WeightVec> front;
          for (const ParetoPoint& p : exact_pareto_front(g))
            front.push_back(p.weight);
          task.shared_front = std::move(front);
        }
      } else {
        task.shared_target = is_tailed_family(task.spec.family)
                                 ? family_mst_weight(generate_tailed(task.spec))
                                 : kruskal_mst(g).weight;
      }
      task.shared_graph = std::move(g);
    }

    std::vector<RunRecord> runs(config.reps);
    auto job = [&](int rep) {
      const std::uint64_t run_seed =
          derive_seed(config.master_seed, si * static_cast<std::uint64_t>(
                                                   config.reps) + rep);
      Rng rng(run_seed);
      RunRecord rec;
      if (!random_family) {
        if (multi) {
          rec = run_gsemo(*task.shared_graph, *task.shared_strategy,
                          task.budget, *task.shared_front, rng,
                          task.spec.label())
                    .record;
        } else {
          rec = run_one_plus_one(*task.shared_graph, *task.shared_strategy,
                                 task.budget, task.shared_target, rng,
                                 task.spec.label());
        }
      } else {
        InstanceSpec spec = task.spec;
        spec.seed = derive_seed(run_seed, 1);
        Graph g = generate(spec);
        const long long budget =
            config.budget > 0
                ? std::min(config.budget, kBudgetCap)
                : default_budget(config.algo, g.num_vertices(), g.num_edges());
        MutationStrategy strategy =
            make_strategy(g, config.variant, derive_seed(run_seed, 2));
        if (multi) {
          std::vector<WeightVec> front;
          for (const ParetoPoint& p : exact_pareto_front(g))
            front.push_back(p.weight);
          rec = run_gsemo(g, strategy, budget, front, rng, spec.label())
                    .record;
        } else {
          rec = run_one_plus_one(g, strategy, budget, std::nullopt, rng,
                                 spec.label());
        }
      }
      rec.seed = run_seed;
      runs[rep] = std::move(rec);
    };

    int threads = config.threads > 0
                      ? config.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, config.reps));
    if (threads == 1) {
      for (int rep = 0; rep < config.reps; ++rep) job(rep);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (int rep = t; rep < config.reps; rep += threads) job(rep);
        });
      for (auto& th : pool) th.join();
    }

    SizeStats stats;
    stats.n = config.sizes[si];
    stats.m = runs.front().m;
    stats.reps = config.reps;
    std::vector<double> iters;
    for (const RunRecord& r : runs)
      if (r.success) iters.push_back(static_cast<double>(r.iterations));
    stats.successes = static_cast<int>(iters.size());
    stats.success_rate = static_cast<double>(stats.successes) / config.reps;
    if (!iters.empty()) {
      stats.median_iters = quantile(iters, 0.5);
      stats.q1 = quantile(iters, 0.25);
      stats.q3 = quantile(iters, 0.75);
    }
    // sizes with failing majorities (or degenerate zero medians) are
    // reported but flagged out of the slope fit
    stats.included = stats.success_rate >= 0.5 && stats.median_iters > 0.0;
    result.per_size.push_back(stats);
    if (records)
      for (RunRecord& r : runs) records->push_back(std::move(r));
  }

  std::vector<double> lx, ly;
  for (const SizeStats& s : result.per_size)
    if (s.included) {
      lx.push_back(std::log(static_cast<double>(s.n)));
      ly.push_back(std::log(s.median_iters));
    }
  result.fitted_sizes = static_cast<int>(lx.size());
  if (lx.size() >= 2) {
    const LinFit fit = least_squares(lx, ly);
    result.alpha = fit.slope;
    result.intercept = fit.intercept;
    result.r_squared = fit.r_squared;
  }
  return result;
}

}  // namespace momst
