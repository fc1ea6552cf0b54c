// Edge rankings and rank-biased selection distributions.
//
// Single objective: edges are ranked by ascending weight. Bi-objective:
// edges are ranked by ascending domination number d(e) = number of edges
// weakly dominating e (including e itself). Ties are broken uniformly at
// random from a dedicated tie seed, so a ranking is always a bijection
// onto 1..m and reproducible from (graph, tie_seed).
//
// With a = (n-1)/n and p(r) = a^r, the biased selection probability of the
// rank-r edge is proportional to sqrt(p(r)) for single-objective runs and
// to p(r) for bi-objective runs, normalized over all m ranks.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "momst/graph.hpp"
#include "momst/rng.hpp"

namespace momst {

struct EdgeRanking {
  enum class Basis { weight, domination };
  Basis basis = Basis::weight;
  std::uint64_t tie_seed = 0;
  std::vector<int> rank;  // edge id -> rank in 1..m
};

// Ascending-weight ranking; requires weight_dim == 1.
EdgeRanking rank_by_weight(const Graph& g, std::uint64_t tie_seed);

// d(e) = |{e' : w(e') weakly dominates w(e)}| (counts e itself); O(m^2).
// Requires weight_dim == 2.
std::vector<int> domination_number(const Graph& g);

// Ascending-domination-number ranking; requires weight_dim == 2.
EdgeRanking rank_by_domination(const Graph& g, std::uint64_t tie_seed);

class SelectionDistribution {
 public:
  enum class Kind { uniform, biased_single, biased_multi };

  Kind kind() const { return kind_; }
  double base() const { return base_; }  // (n-1)/n for biased kinds, else 0
  int num_edges() const { return static_cast<int>(prob_.size()); }
  double prob(EdgeId e) const { return prob_[e]; }
  const std::vector<double>& probs() const { return prob_; }

  // Draws an edge id with probability prob(e).
  EdgeId sample(Rng& rng) const;

  friend SelectionDistribution uniform_distribution(int m);
  friend SelectionDistribution biased_distribution(const EdgeRanking& ranking,
                                                   int num_vertices);

 private:
  SelectionDistribution() = default;
  void finalize();  // builds cumulative sums, checks sum/positivity

  Kind kind_ = Kind::uniform;
  double base_ = 0.0;
  std::vector<double> prob_;
  std::vector<double> cum_;
};

// Every edge with probability exactly 1/m.
SelectionDistribution uniform_distribution(int m);

// Rank-biased distribution for the given ranking; the exponent (r/2 or r)
// follows the ranking basis. num_vertices supplies n for a = (n-1)/n.
SelectionDistribution biased_distribution(const EdgeRanking& ranking,
                                          int num_vertices);

// CSV "edge_id,rank,d,prob"; d is left empty unless `domination` is given.
void write_ranking_csv(std::ostream& out, const EdgeRanking& ranking,
                       const SelectionDistribution& dist,
                       const std::vector<int>* domination = nullptr);

}  // namespace momst
