// Test-only reference implementations, deliberately independent of the
// library's algorithms: a dense Prim MST, a quadratic non-dominated filter,
// random connected graphs built on std::mt19937_64 directly, and small
// statistics utilities (chi-square, Spearman, bipartite matching).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "momst/graph.hpp"
#include "momst/oracles.hpp"

namespace testutil {

// Random connected graph: a random permutation chain for connectivity plus
// `extra_edges` distinct random chords. Integer weights in [1, 50] per
// component so all comparisons are exact.
inline momst::Graph random_connected_graph(int n, int extra_edges,
                                           int weight_dim,
                                           std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  std::set<std::pair<int, int>> used;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) {
    auto p = std::minmax(perm[i], perm[i + 1]);
    used.insert({p.first, p.second});
    pairs.push_back({p.first, p.second});
  }
  std::uniform_int_distribution<int> vertex(0, n - 1);
  const int max_extra =
      n * (n - 1) / 2 - static_cast<int>(pairs.size());
  int want = std::min(extra_edges, max_extra);
  while (want > 0) {
    int u = vertex(gen), v = vertex(gen);
    if (u == v) continue;
    auto p = std::minmax(u, v);
    if (!used.insert({p.first, p.second}).second) continue;
    pairs.push_back({p.first, p.second});
    --want;
  }
  std::uniform_int_distribution<int> w(1, 50);
  std::vector<momst::Edge> edges;
  for (auto [u, v] : pairs) {
    if (weight_dim == 1)
      edges.push_back({u, v, momst::WeightVec(static_cast<double>(w(gen)))});
    else
      edges.push_back({u, v, momst::WeightVec(static_cast<double>(w(gen)),
                                              static_cast<double>(w(gen)))});
  }
  return momst::Graph(n, weight_dim, std::move(edges));
}

// Dense Prim, O(n^2); single objective.
inline double prim_mst_weight(const momst::Graph& g) {
  const int n = g.num_vertices();
  const double inf = 1e300;
  std::vector<double> best(n, inf);
  std::vector<char> done(n, 0);
  best[0] = 0.0;
  double total = 0.0;
  for (int it = 0; it < n; ++it) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (u == -1 || best[v] < best[u])) u = v;
    done[u] = 1;
    total += best[u];
    for (const momst::IncidentEdge& ie : g.neighbors(u))
      if (!done[ie.to])
        best[ie.to] = std::min(best[ie.to], g.edge(ie.edge).w[0]);
  }
  return total;
}

// Non-dominated weight vectors over all spanning trees via the O(T^2)
// pairwise filter (independent of the library's streaming filter).
inline std::vector<momst::WeightVec> brute_front(const momst::Graph& g) {
  std::vector<momst::WeightVec> all;
  momst::enumerate_spanning_trees(g, [&](const std::vector<momst::EdgeId>& t) {
    momst::WeightVec w = momst::WeightVec::zero(g.weight_dim());
    for (momst::EdgeId e : t) w += g.edge(e).w;
    all.push_back(w);
  });
  std::vector<momst::WeightVec> front;
  for (const momst::WeightVec& w : all) {
    bool dominated = false;
    for (const momst::WeightVec& o : all)
      if (momst::strictly_dominates(o, w)) {
        dominated = true;
        break;
      }
    if (!dominated && std::find(front.begin(), front.end(), w) == front.end())
      front.push_back(w);
  }
  std::sort(front.begin(), front.end());
  return front;
}

inline double chi_square(const std::vector<long long>& counts,
                         const std::vector<double>& probs) {
  long long total = 0;
  for (long long c : counts) total += c;
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probs[i];
    const double d = counts[i] - expected;
    stat += d * d / expected;
  }
  return stat;
}

// Upper critical values of the chi-square distribution at p = 0.001.
inline double chi2_crit_p001(int df) {
  switch (df) {
    case 1: return 10.828;
    case 2: return 13.816;
    case 3: return 16.266;
    case 4: return 18.467;
    case 5: return 20.515;
    case 8: return 26.124;
    case 15: return 37.697;
    default: return -1.0;  // unsupported df: fail loudly
  }
}

inline std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && v[order[j]] == v[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j - 1)) / 2.0 + 1.0;
    for (std::size_t t = i; t < j; ++t) rank[order[t]] = avg;
    i = j;
  }
  return rank;
}

inline double spearman_rho(const std::vector<double>& x,
                           const std::vector<double>& y) {
  const std::vector<double> rx = average_ranks(x), ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Kuhn's augmenting-path bipartite matching. adj[i] lists the right-side
// vertices usable by left vertex i; returns the maximum matching size.
inline int kuhn_matching(const std::vector<std::vector<int>>& adj,
                         int right_size) {
  std::vector<int> match_right(right_size, -1);
  std::vector<char> visited;
  std::function<bool(int)> try_left = [&](int u) -> bool {
    for (int v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] == -1 || try_left(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    visited.assign(right_size, 0);
    if (try_left(static_cast<int>(u))) ++matched;
  }
  return matched;
}

}  // namespace testutil
