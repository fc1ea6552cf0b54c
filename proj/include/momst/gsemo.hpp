// Global SEMO for the bi-objective minimum spanning tree problem: an
// archive of mutually non-dominated trees, uniform parent selection,
// edge-exchange mutation, and dominance-based acceptance. A run succeeds
// once the archive covers every vector of the target front.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "momst/mutation.hpp"
#include "momst/run_record.hpp"

namespace momst {

class ParetoArchive {
 public:
  struct Member {
    SpanningTree tree;
    WeightVec weight;
  };

  // Rejects candidates strictly dominated by a member; otherwise removes
  // every member the candidate weakly dominates (an equal-weight member is
  // replaced by the newcomer) and inserts. Returns whether it inserted;
  // removed members' weights are appended to *removed when given.
  bool insert(SpanningTree tree, const WeightVec& w,
              std::vector<WeightVec>* removed = nullptr);

  std::size_t size() const { return members_.size(); }
  const std::vector<Member>& members() const { return members_; }

  // Componentwise minimum over all members.
  WeightVec ideal_point() const;

  // O(|P|^2) check used by tests and assertions.
  bool mutually_nondominated() const;

 private:
  std::vector<Member> members_;
};

// CSV: w1,w2,edges  (edges = tree edge ids joined by ';', ascending).
void write_archive_csv(std::ostream& out, const ParetoArchive& archive);

struct GsemoResult {
  RunRecord record;
  ParetoArchive archive;
  // (iteration, number of target vectors covered); appended whenever the
  // coverage count changes, starting with the initial tree at iteration 0.
  std::vector<std::pair<long long, int>> coverage_trace;
};

using GsemoObserver = std::function<void(
    long long iteration, const ParetoArchive& archive, bool inserted)>;

// target_front: distinct weight vectors to cover (the exact front, or any
// reference set). RunRecord.seed is left to the caller.
GsemoResult run_gsemo(const Graph& g, const MutationStrategy& strategy,
                      long long budget,
                      const std::vector<WeightVec>& target_front, Rng& rng,
                      const std::string& graph_label = "graph",
                      const GsemoObserver& observer = {});

}  // namespace momst
