// Command-line front end: instance generation, rankings, EA / archive runs,
// exact and weighted-sum fronts, share-curve estimation, the geometric-decay
// fit, and runtime scaling sweeps.
//
// Exit codes: 0 success, 1 usage error (bad flags or parameters),
// 2 instance error (unreadable / invalid / intractable input).
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "momst/ea_single.hpp"
#include "momst/errors.hpp"
#include "momst/experiments.hpp"
#include "momst/generators.hpp"
#include "momst/gsemo.hpp"
#include "momst/oracles.hpp"
#include "momst/rank_bias.hpp"
#include "momst/run_record.hpp"

namespace {

using namespace momst;

// Stream sink: a file when a path is given, stdout for "" or "-".
class OutStream {
 public:
  explicit OutStream(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

MutationStrategy::Variant variant_from_name(const std::string& s) {
  if (s == "um") return MutationStrategy::Variant::uniform;
  if (s == "bm") return MutationStrategy::Variant::biased;
  if (s == "mm") return MutationStrategy::Variant::mixed;
  throw UsageError("unknown strategy '" + s + "' (expected um, bm or mm)");
}

Algo algo_from_name(const std::string& s) {
  if (s == "ea") return Algo::one_plus_one;
  if (s == "gsemo") return Algo::gsemo;
  throw UsageError("unknown algorithm '" + s + "' (expected ea or gsemo)");
}

void write_front_csv(std::ostream& out, const std::vector<WeightVec>& front) {
  out << "w1,w2\n";
  for (const WeightVec& w : front)
    out << format_number(w[0]) << ',' << format_number(w[1]) << '\n';
}

std::vector<WeightVec> read_front_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open front file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("w1", 0) != 0)
    throw InstanceError("expected a CSV header starting with 'w1'");
  std::vector<WeightVec> front;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    const double w1 = std::stod(field);
    std::getline(row, field, ',');
    const double w2 = std::stod(field);
    front.emplace_back(w1, w2);
  }
  if (front.empty()) throw InstanceError("front file has no data rows");
  return front;
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    sizes.push_back(std::stoi(item));
  }
  if (sizes.empty()) throw UsageError("no sizes given");
  return sizes;
}

std::string default_label(const std::string& graph_path) {
  return std::filesystem::path(graph_path).stem().string();
}

int run_cli(int argc, char** argv) {
  CLI::App app{"minimum spanning tree evolutionary-algorithm workbench"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------
  struct {
    std::string family = "g1", weights = "rndrnd", out, front_out;
    int n = 0, l = -1;
    double u = 3.0, k = -1.0;
    std::uint64_t seed = 0;
  } gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  gen_cmd->add_option("--family", gen.family,
                      "g1|g2|lollipop|g1m|g2m|ceg|deg")->required();
  gen_cmd->add_option("--n", gen.n, "number of vertices")->required();
  gen_cmd->add_option("--weights", gen.weights, "ceg/deg: rndrnd|eucrnd");
  gen_cmd->add_option("--seed", gen.seed, "ceg/deg: point/weight seed");
  gen_cmd->add_option("--l", gen.l, "g2m: cheap-path length");
  gen_cmd->add_option("--u", gen.u, "g2m: cheap-path weight");
  gen_cmd->add_option("--k", gen.k, "g1m/g2m: clique weight");
  gen_cmd->add_option("--out", gen.out, "graph file (default stdout)");
  gen_cmd->add_option("--front-out", gen.front_out,
                      "g1m/g2m: also write the known non-dominated front");
  gen_cmd->callback([&] {
    InstanceSpec spec;
    spec.family = family_from_name(gen.family);
    spec.n = gen.n;
    spec.weights = weight_model_from_name(gen.weights);
    spec.seed = gen.seed;
    spec.l = gen.l;
    spec.u = gen.u;
    spec.k = gen.k;
    if (!gen.front_out.empty()) {
      if (spec.family != Family::g1m && spec.family != Family::g2m)
        throw UsageError("--front-out needs family g1m or g2m");
      TriangularTailed inst = generate_tailed(spec);
      OutStream fo(gen.front_out);
      write_front_csv(fo.get(), family_pareto_front(inst));
      OutStream out(gen.out);
      inst.graph.write(out.get());
      return;
    }
    Graph g = generate(spec);
    OutStream out(gen.out);
    g.write(out.get());
  });

  // ---- rank ---------------------------------------------------------
  struct {
    std::string graph, out;
    std::uint64_t tie_seed = 0;
  } rank;
  auto* rank_cmd = app.add_subcommand(
      "rank", "edge ranking and biased selection probabilities");
  rank_cmd->add_option("--graph", rank.graph, "instance file")->required();
  rank_cmd->add_option("--tie-seed", rank.tie_seed, "tie-break seed");
  rank_cmd->add_option("--out", rank.out, "CSV file (default stdout)");
  rank_cmd->callback([&] {
    Graph g = Graph::load(rank.graph);
    OutStream out(rank.out);
    if (g.weight_dim() == 1) {
      EdgeRanking r = rank_by_weight(g, rank.tie_seed);
      write_ranking_csv(out.get(), r,
                        biased_distribution(r, g.num_vertices()));
    } else {
      EdgeRanking r = rank_by_domination(g, rank.tie_seed);
      std::vector<int> d = domination_number(g);
      write_ranking_csv(out.get(), r,
                        biased_distribution(r, g.num_vertices()), &d);
    }
  });

  // ---- run ----------------------------------------------------------
  struct {
    std::string graph, algo = "ea", strategy = "um", out, front, label;
    std::string archive_out;
    long long budget = 0;
    int reps = 1;
    std::uint64_t seed = 1, tie_seed = 0;
    std::optional<double> target;
  } run;
  auto* run_cmd = app.add_subcommand("run", "run the (1+1) EA or the archive"
                                            " algorithm on an instance");
  run_cmd->add_option("--graph", run.graph, "instance file")->required();
  run_cmd->add_option("--algo", run.algo, "ea|gsemo");
  run_cmd->add_option("--strategy", run.strategy, "um|bm|mm");
  run_cmd->add_option("--budget", run.budget,
                      "iteration budget (0 = auto policy)");
  run_cmd->add_option("--reps", run.reps, "independent repetitions");
  run_cmd->add_option("--seed", run.seed, "master seed");
  run_cmd->add_option("--tie-seed", run.tie_seed, "ranking tie-break seed");
  run_cmd->add_option("--target", run.target, "ea: stop weight (default MST)");
  run_cmd->add_option("--front", run.front,
                      "gsemo: target front CSV (default exact front)");
  run_cmd->add_option("--label", run.label, "graph label in the CSV");
  run_cmd->add_option("--out", run.out, "runs CSV (default stdout)");
  run_cmd->add_option("--archive-out", run.archive_out,
                      "gsemo: final archive CSV of the last repetition");
  run_cmd->callback([&] {
    Graph g = Graph::load(run.graph);
    const Algo algo = algo_from_name(run.algo);
    const MutationStrategy strategy =
        make_strategy(g, variant_from_name(run.strategy), run.tie_seed);
    const long long budget =
        run.budget > 0 ? std::min(run.budget, kBudgetCap)
                       : default_budget(algo, g.num_vertices(), g.num_edges());
    const std::string label =
        run.label.empty() ? default_label(run.graph) : run.label;
    if (run.reps < 1) throw UsageError("need reps >= 1");

    std::vector<WeightVec> front;
    if (algo == Algo::gsemo)
      front = run.front.empty()
                  ? [&] {
                      std::vector<WeightVec> f;
                      for (const ParetoPoint& p : exact_pareto_front(g))
                        f.push_back(p.weight);
                      return f;
                    }()
                  : read_front_csv(run.front);

    OutStream out(run.out);
    write_run_csv_header(out.get());
    for (int rep = 0; rep < run.reps; ++rep) {
      const std::uint64_t run_seed = derive_seed(run.seed, rep);
      Rng rng(run_seed);
      RunRecord rec;
      if (algo == Algo::one_plus_one) {
        rec = run_one_plus_one(g, strategy, budget, run.target, rng, label);
      } else {
        GsemoResult res = run_gsemo(g, strategy, budget, front, rng, label);
        rec = res.record;
        if (!run.archive_out.empty() && rep == run.reps - 1) {
          OutStream ao(run.archive_out);
          write_archive_csv(ao.get(), res.archive);
        }
      }
      rec.seed = run_seed;
      write_run_csv_row(out.get(), rec);
    }
  });

  // ---- pareto -------------------------------------------------------
  struct {
    std::string graph, method = "exact", out;
    int steps = 1000;
  } pareto;
  auto* pareto_cmd = app.add_subcommand(
      "pareto", "non-dominated front of a bi-objective instance");
  pareto_cmd->add_option("--graph", pareto.graph, "instance file")->required();
  pareto_cmd->add_option("--method", pareto.method,
                         "exact (enumeration) | wsum (scalarization sweep)");
  pareto_cmd->add_option("--steps", pareto.steps, "wsum: sweep steps");
  pareto_cmd->add_option("--out", pareto.out, "front CSV (default stdout)");
  pareto_cmd->callback([&] {
    Graph g = Graph::load(pareto.graph);
    std::vector<WeightVec> front;
    if (pareto.method == "exact") {
      for (const ParetoPoint& p : exact_pareto_front(g))
        front.push_back(p.weight);
    } else if (pareto.method == "wsum") {
      front = weighted_sum_front(g, pareto.steps).front;
    } else {
      throw UsageError("unknown method '" + pareto.method + "'");
    }
    OutStream out(pareto.out);
    write_front_csv(out.get(), front);
  });

  // ---- estimate-pm --------------------------------------------------
  struct {
    std::string family = "ceg", weights = "rndrnd", out;
    int n = 0, instances = 10, steps = 1000;
    std::uint64_t seed = 1;
  } pm;
  auto* pm_cmd = app.add_subcommand(
      "estimate-pm", "rank-wise non-dominated-tree membership shares");
  pm_cmd->add_option("--family", pm.family, "bi-objective family")->required();
  pm_cmd->add_option("--n", pm.n, "number of vertices")->required();
  pm_cmd->add_option("--weights", pm.weights, "ceg/deg: rndrnd|eucrnd");
  pm_cmd->add_option("--instances", pm.instances, "instances to average");
  pm_cmd->add_option("--steps", pm.steps, "scalarization sweep steps");
  pm_cmd->add_option("--seed", pm.seed, "master seed");
  pm_cmd->add_option("--out", pm.out, "curve CSV (default stdout)");
  pm_cmd->callback([&] {
    InstanceSpec spec;
    spec.family = family_from_name(pm.family);
    spec.n = pm.n;
    spec.weights = weight_model_from_name(pm.weights);
    PmCurve curve = estimate_pm(spec, pm.instances, pm.steps, pm.seed);
    OutStream out(pm.out);
    write_pm_csv(out.get(), curve);
  });

  // ---- fit-beta -----------------------------------------------------
  struct {
    std::string in;
    int n = 0;
  } fit;
  auto* fit_cmd = app.add_subcommand(
      "fit-beta", "fit beta in p(r) = beta * ((n-1)/n)^r to a share curve");
  fit_cmd->add_option("--in", fit.in, "curve CSV from estimate-pm")->required();
  fit_cmd->add_option("--n", fit.n, "number of vertices")->required();
  fit_cmd->callback([&] {
    std::ifstream in(fit.in);
    if (!in) throw UsageError("cannot open curve file: " + fit.in);
    PmCurve curve = read_pm_csv(in);
    RegressionFit f = fit_beta_model(curve, fit.n);
    std::cout << "beta " << format_number(f.beta) << '\n'
              << "r_squared " << format_number(f.r_squared) << '\n'
              << "rmse " << format_number(f.rmse) << '\n'
              << "points " << f.points << '\n';
  });

  // ---- scale --------------------------------------------------------
  struct {
    std::string algo = "ea", strategy = "um", family = "g1";
    std::string weights = "rndrnd", sizes, out, budget_policy = "auto";
    int reps = 50, threads = 0;
    long long budget = 0;
    std::uint64_t seed = 1;
  } scale;
  auto* scale_cmd = app.add_subcommand(
      "scale", "median runtimes over a size sweep and the log-log slope");
  scale_cmd->add_option("--algo", scale.algo, "ea|gsemo");
  scale_cmd->add_option("--strategy", scale.strategy, "um|bm|mm");
  scale_cmd->add_option("--family", scale.family, "instance family");
  scale_cmd->add_option("--weights", scale.weights, "ceg/deg: rndrnd|eucrnd");
  scale_cmd->add_option("--sizes", scale.sizes, "comma-separated n values")
      ->required();
  scale_cmd->add_option("--reps", scale.reps, "runs per size");
  scale_cmd->add_option("--budget", scale.budget,
                        "iteration budget (0 = auto policy)");
  scale_cmd->add_option("--budget-policy", scale.budget_policy,
                        "'auto' or a fixed iteration budget");
  scale_cmd->add_option("--seed", scale.seed, "master seed");
  scale_cmd->add_option("--threads", scale.threads,
                        "worker threads (0 = hardware)");
  scale_cmd->add_option("--out", scale.out, "per-run CSV (optional)");
  scale_cmd->callback([&] {
    ScalingConfig config;
    config.algo = algo_from_name(scale.algo);
    config.variant = variant_from_name(scale.strategy);
    config.family.family = family_from_name(scale.family);
    config.family.weights = weight_model_from_name(scale.weights);
    config.sizes = parse_sizes(scale.sizes);
    config.reps = scale.reps;
    config.budget = scale.budget;
    if (scale.budget_policy != "auto") {
      try {
        config.budget = std::stoll(scale.budget_policy);
      } catch (const std::exception&) {
        throw UsageError("--budget-policy expects 'auto' or an integer");
      }
    }
    config.master_seed = scale.seed;
    config.threads = scale.threads;
    std::vector<RunRecord> records;
    ScalingResult res =
        runtime_scaling(config, scale.out.empty() ? nullptr : &records);
    if (!scale.out.empty()) {
      OutStream out(scale.out);
      write_run_csv_header(out.get());
      for (const RunRecord& r : records) write_run_csv_row(out.get(), r);
    }
    for (const SizeStats& s : res.per_size)
      std::cout << "n " << s.n << " m " << s.m << " success_rate "
                << format_number(s.success_rate) << " median "
                << format_number(s.median_iters) << " q1 "
                << format_number(s.q1) << " q3 " << format_number(s.q3)
                << (s.included ? "" : " (excluded)") << '\n';
    std::cout << "alpha " << format_number(res.alpha) << '\n'
              << "intercept " << format_number(res.intercept) << '\n'
              << "r_squared " << format_number(res.r_squared) << '\n'
              << "fitted_sizes " << res.fitted_sizes << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const momst::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const momst::InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
