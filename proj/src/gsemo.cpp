#include "momst/gsemo.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>

#include "momst/ea_single.hpp"
#include "momst/errors.hpp"

namespace momst {

bool ParetoArchive::insert(SpanningTree tree, const WeightVec& w,
                           std::vector<WeightVec>* removed) {
  for (const Member& mem : members_)
    if (strictly_dominates(mem.weight, w)) return false;
  std::erase_if(members_, [&](const Member& mem) {
    // weak dominance: an equal-weight member makes way for the newcomer
    if (!weakly_dominates(w, mem.weight)) return false;
    if (removed) removed->push_back(mem.weight);
    return true;
  });
  members_.push_back({std::move(tree), w});
  return true;
}

WeightVec ParetoArchive::ideal_point() const {
  WeightVec best = members_.front().weight;
  for (const Member& mem : members_)
    for (int i = 0; i < best.dim(); ++i)
      best[i] = std::min(best[i], mem.weight[i]);
  return best;
}

bool ParetoArchive::mutually_nondominated() const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = 0; j < members_.size(); ++j)
      if (i != j && weakly_dominates(members_[i].weight, members_[j].weight))
        return false;
  return true;
}

void write_archive_csv(std::ostream& out, const ParetoArchive& archive) {
  out << "w1,w2,edges\n";
  std::vector<const ParetoArchive::Member*> order;
  for (const auto& mem : archive.members()) order.push_back(&mem);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return a->weight < b->weight; });
  for (const auto* mem : order) {
    out << format_number(mem->weight[0]) << ','
        << format_number(mem->weight[1]) << ',';
    const auto ids = mem->tree.sorted_edge_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
      out << (i ? ";" : "") << ids[i];
    out << '\n';
  }
}

GsemoResult run_gsemo(const Graph& g, const MutationStrategy& strategy,
                      long long budget,
                      const std::vector<WeightVec>& target_front, Rng& rng,
                      const std::string& graph_label,
                      const GsemoObserver& observer) {
  if (g.weight_dim() != 2)
    throw UsageError("the archive EA expects a bi-objective graph");
  if (budget < 0) throw UsageError("budget must be non-negative");
  if (target_front.empty()) throw UsageError("target front is empty");
  budget = std::min(budget, kBudgetCap);

  std::map<WeightVec, bool> covered;
  for (const WeightVec& w : target_front) {
    if (w.dim() != 2) throw UsageError("target front must be bi-objective");
    if (!covered.emplace(w, false).second)
      throw UsageError("duplicate vector in target front");
  }
  const int want = static_cast<int>(covered.size());
  int have = 0;

  GsemoResult res;
  std::vector<WeightVec> dropped;
  // Coverage bookkeeping; dropped members may uncover a target vector when
  // the target is not the true front (a reference vector can be dominated).
  auto account = [&](const WeightVec& added) {
    for (const WeightVec& w : dropped) {
      auto it = covered.find(w);
      if (it != covered.end() && it->second && !(w == added)) {
        it->second = false;
        --have;
      }
    }
    auto it = covered.find(added);
    if (it != covered.end() && !it->second) {
      it->second = true;
      ++have;
    }
  };

  const auto t0 = std::chrono::steady_clock::now();
  {
    SpanningTree init = random_spanning_tree(g, rng);
    WeightVec w = tree_weight(g, init);
    res.archive.insert(std::move(init), w);
    account(w);
    res.coverage_trace.emplace_back(0, have);
  }
  if (observer) observer(0, res.archive, true);

  long long iter = 0;
  bool success = have == want;
  while (!success && iter < budget) {
    ++iter;
    const auto& members = res.archive.members();
    const SpanningTree& parent =
        members[rng.uniform_index(members.size())].tree;
    SpanningTree child = parent;
    mutate_in_place(g, child, strategy, rng);
    const WeightVec w = tree_weight(g, child);
    dropped.clear();
    const bool inserted = res.archive.insert(std::move(child), w, &dropped);
    if (inserted) {
      const int before = have;
      account(w);
      if (have != before) res.coverage_trace.emplace_back(iter, have);
    }
    if (observer) observer(iter, res.archive, inserted);
    success = have == want;
  }
  const auto t1 = std::chrono::steady_clock::now();

  res.record.graph = graph_label;
  res.record.algo = std::string("gsemo-") + strategy.name();
  res.record.n = g.num_vertices();
  res.record.m = g.num_edges();
  res.record.iterations = iter;
  res.record.success = success;
  res.record.final_weight = res.archive.ideal_point();
  res.record.budget = budget;
  res.record.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return res;
}

}  // namespace momst
