#include "momst/rank_bias.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "momst/errors.hpp"
#include "momst/run_record.hpp"

namespace momst {

namespace {

// Sorts edge ids by (key, random tiebreak); i.i.d. 64-bit tiebreak values
// give every ordering of a tie group equal probability.
EdgeRanking make_ranking(EdgeRanking::Basis basis, std::uint64_t tie_seed,
                         const std::vector<double>& key) {
  const int m = static_cast<int>(key.size());
  Rng rng(tie_seed);
  std::vector<std::uint64_t> tiebreak(m);
  for (auto& t : tiebreak) t = rng.next_u64();
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (key[a] != key[b]) return key[a] < key[b];
    if (tiebreak[a] != tiebreak[b]) return tiebreak[a] < tiebreak[b];
    return a < b;
  });
  EdgeRanking r;
  r.basis = basis;
  r.tie_seed = tie_seed;
  r.rank.assign(m, 0);
  for (int pos = 0; pos < m; ++pos) r.rank[order[pos]] = pos + 1;
  return r;
}

}  // namespace

EdgeRanking rank_by_weight(const Graph& g, std::uint64_t tie_seed) {
  if (g.weight_dim() != 1)
    throw UsageError("rank_by_weight expects a single-objective graph");
  std::vector<double> key(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) key[e] = g.edge(e).w[0];
  return make_ranking(EdgeRanking::Basis::weight, tie_seed, key);
}

std::vector<int> domination_number(const Graph& g) {
  if (g.weight_dim() != 2)
    throw UsageError("domination_number expects a bi-objective graph");
  const int m = g.num_edges();
  std::vector<int> d(m, 0);
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = 0; f < m; ++f)
      if (weakly_dominates(g.edge(f).w, g.edge(e).w)) ++d[e];
  return d;
}

EdgeRanking rank_by_domination(const Graph& g, std::uint64_t tie_seed) {
  std::vector<int> d = domination_number(g);
  std::vector<double> key(d.begin(), d.end());
  return make_ranking(EdgeRanking::Basis::domination, tie_seed, key);
}

void SelectionDistribution::finalize() {
  const int m = num_edges();
  long double total = 0.0L;
  for (double p : prob_) {
    if (!(p > 0.0))
      throw InstanceError("selection probability underflowed to zero");
    total += p;
  }
  for (double& p : prob_) p = static_cast<double>(p / total);
  cum_.resize(m);
  long double acc = 0.0L;
  for (int e = 0; e < m; ++e) {
    acc += prob_[e];
    cum_[e] = static_cast<double>(acc);
  }
  long double sum = 0.0L;
  for (double p : prob_) sum += p;
  if (std::fabs(static_cast<double>(sum) - 1.0) > 1e-12)
    throw InstanceError("selection probabilities do not sum to 1");
}

EdgeId SelectionDistribution::sample(Rng& rng) const {
  const double u = rng.uniform01() * cum_.back();
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) --it;  // u == cum_.back() cannot occur, but be safe
  return static_cast<EdgeId>(it - cum_.begin());
}

SelectionDistribution uniform_distribution(int m) {
  if (m < 1) throw UsageError("uniform_distribution needs m >= 1");
  SelectionDistribution d;
  d.kind_ = SelectionDistribution::Kind::uniform;
  d.base_ = 0.0;
  d.prob_.assign(m, 1.0 / m);
  d.finalize();
  return d;
}

SelectionDistribution biased_distribution(const EdgeRanking& ranking,
                                          int num_vertices) {
  const int m = static_cast<int>(ranking.rank.size());
  if (m < 1) throw UsageError("empty ranking");
  if (num_vertices < 2) throw UsageError("need at least 2 vertices");
  {
    std::vector<char> seen(m + 1, 0);
    for (int r : ranking.rank) {
      if (r < 1 || r > m || seen[r])
        throw UsageError("ranking is not a bijection onto 1..m");
      seen[r] = 1;
    }
  }
  const bool single = ranking.basis == EdgeRanking::Basis::weight;
  const double a = (num_vertices - 1) / static_cast<double>(num_vertices);
  const double log_a = std::log(a);
  SelectionDistribution d;
  d.kind_ = single ? SelectionDistribution::Kind::biased_single
                   : SelectionDistribution::Kind::biased_multi;
  d.base_ = a;
  d.prob_.resize(m);
  // p(r) = a^r; selection weight sqrt(p(r)) for the single-objective bias,
  // p(r) for the bi-objective one. exp(log) keeps per-term error ~1 ulp.
  for (EdgeId e = 0; e < m; ++e) {
    const double exponent = single ? 0.5 * ranking.rank[e] : ranking.rank[e];
    d.prob_[e] = std::exp(exponent * log_a);
  }
  d.finalize();
  return d;
}

void write_ranking_csv(std::ostream& out, const EdgeRanking& ranking,
                       const SelectionDistribution& dist,
                       const std::vector<int>* domination) {
  out << "edge_id,rank,d,prob\n";
  for (std::size_t e = 0; e < ranking.rank.size(); ++e) {
    out << e << ',' << ranking.rank[e] << ',';
    if (domination) out << (*domination)[e];
    out << ',' << format_number(dist.prob(static_cast<EdgeId>(e))) << '\n';
  }
}

}  // namespace momst
