#include "momst/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "momst/errors.hpp"
#include "momst/run_record.hpp"

namespace momst {

namespace {

struct UnionFind {
  std::vector<int> parent, size;
  explicit UnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
};

// Union-find without path compression so unions can be rolled back.
struct RollbackUnionFind {
  std::vector<int> parent, size;
  std::vector<int> trail;  // roots that were attached, in order
  explicit RollbackUnionFind(int n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    trail.push_back(b);
    return true;
  }
  void rollback() {
    int b = trail.back();
    trail.pop_back();
    size[parent[b]] -= size[b];
    parent[b] = b;
  }
};

}  // namespace

SpanningTree kruskal_by_key(const Graph& g, const std::vector<double>& key) {
  if (static_cast<int>(key.size()) != g.num_edges())
    throw UsageError("need one key per edge");
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return a < b;  // deterministic tie-break by edge id
  });
  UnionFind uf(g.num_vertices());
  std::vector<EdgeId> chosen;
  chosen.reserve(g.num_vertices() - 1);
  for (EdgeId id : order) {
    if (uf.unite(g.edge(id).u, g.edge(id).v)) {
      chosen.push_back(id);
      if (static_cast<int>(chosen.size()) == g.num_vertices() - 1) break;
    }
  }
  return SpanningTree::of_edges(g, std::move(chosen));
}

MstResult kruskal_mst(const Graph& g) {
  if (g.weight_dim() != 1)
    throw UsageError("kruskal_mst expects a single-objective graph");
  std::vector<double> key(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) key[e] = g.edge(e).w[0];
  MstResult res{kruskal_by_key(g, key), 0.0};
  res.weight = tree_weight(g, res.tree)[0];
  return res;
}

double spanning_tree_count(const Graph& g) {
  const int n = g.num_vertices();
  // Determinant of the (n-1)x(n-1) principal minor of the Laplacian.
  std::vector<std::vector<long double>> a(n - 1,
                                          std::vector<long double>(n - 1, 0));
  for (const Edge& e : g.edges()) {
    if (e.u < n - 1) a[e.u][e.u] += 1;
    if (e.v < n - 1) a[e.v][e.v] += 1;
    if (e.u < n - 1 && e.v < n - 1) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  long double det = 1;
  for (int col = 0; col < n - 1; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n - 1; ++r)
      if (std::fabs((double)a[r][col]) > std::fabs((double)a[pivot][col]))
        pivot = r;
    if (a[pivot][col] == 0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < n - 1; ++r) {
      long double f = a[r][col] / a[col][col];
      for (int c = col; c < n - 1; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return static_cast<double>(std::roundl(det));
}

void enumerate_spanning_trees(
    const Graph& g,
    const std::function<void(const std::vector<EdgeId>&)>& emit) {
  const double count = spanning_tree_count(g);
  if (count > kEnumerationGuard)
    throw InstanceError("refusing to enumerate " + format_number(count) +
                        " spanning trees (guard: " +
                        format_number(kEnumerationGuard) + ")");
  const int n = g.num_vertices();
  const int m = g.num_edges();
  RollbackUnionFind uf(n);
  std::vector<EdgeId> chosen;
  chosen.reserve(n - 1);
  // Scratch for the connectivity prune.
  UnionFind probe(n);

  // Can edges first..m-1 still merge the current components into one?
  auto connectable = [&](int first, int components) {
    probe.parent.assign(uf.parent.begin(), uf.parent.end());
    probe.size.assign(uf.size.begin(), uf.size.end());
    int comps = components;
    for (int i = first; i < m && comps > 1; ++i) {
      // probe roots agree with uf roots because probe starts as a copy
      int a = probe.find(g.edge(i).u), b = probe.find(g.edge(i).v);
      if (a != b) {
        probe.parent[b] = a;
        --comps;
      }
    }
    return comps == 1;
  };

  // Include/exclude edges in id order: every spanning tree corresponds to
  // exactly one decision path, so each is emitted once.
  auto rec = [&](auto&& self, int i, int components) -> void {
    if (components == 1) {
      emit(chosen);
      return;
    }
    if (i == m || !connectable(i, components)) return;
    const Edge& e = g.edge(i);
    if (uf.find(e.u) != uf.find(e.v)) {
      uf.unite(e.u, e.v);
      chosen.push_back(i);
      self(self, i + 1, components - 1);
      chosen.pop_back();
      uf.rollback();
    }
    self(self, i + 1, components);
  };
  rec(rec, 0, n);
}

std::vector<std::vector<EdgeId>> all_spanning_trees(const Graph& g) {
  std::vector<std::vector<EdgeId>> trees;
  enumerate_spanning_trees(
      g, [&](const std::vector<EdgeId>& ids) { trees.push_back(ids); });
  return trees;
}

std::vector<ParetoPoint> exact_pareto_front(const Graph& g) {
  if (g.weight_dim() != 2)
    throw UsageError("exact_pareto_front expects a bi-objective graph");
  std::vector<ParetoPoint> front;
  enumerate_spanning_trees(g, [&](const std::vector<EdgeId>& ids) {
    WeightVec w = WeightVec::zero(2);
    for (EdgeId id : ids) w += g.edge(id).w;
    for (const ParetoPoint& p : front)
      if (p.weight == w || strictly_dominates(p.weight, w)) return;
    std::erase_if(front, [&](const ParetoPoint& p) {
      return strictly_dominates(w, p.weight);
    });
    front.push_back({w, ids});
  });
  std::sort(front.begin(), front.end(),
            [](const ParetoPoint& a, const ParetoPoint& b) {
              return a.weight < b.weight;
            });
  return front;
}

WeightedSumFront weighted_sum_front(const Graph& g, int steps) {
  if (g.weight_dim() != 2)
    throw UsageError("weighted_sum_front expects a bi-objective graph");
  if (steps < 1) throw UsageError("weighted_sum_front needs steps >= 1");
  std::set<std::vector<EdgeId>> seen;
  std::vector<std::vector<EdgeId>> trees;
  std::vector<WeightVec> weights;
  std::vector<double> key(g.num_edges());
  for (int k = 0; k <= steps; ++k) {
    const double lambda = static_cast<double>(k) / steps;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      key[e] = lambda * g.edge(e).w[0] + (1.0 - lambda) * g.edge(e).w[1];
    SpanningTree t = kruskal_by_key(g, key);
    std::vector<EdgeId> ids = t.sorted_edge_ids();
    if (seen.insert(ids).second) {
      weights.push_back(tree_weight(g, t));
      trees.push_back(std::move(ids));
    }
  }
  // Drop trees whose vector some other collected vector strictly dominates;
  // distinct trees sharing a surviving vector all stay.
  WeightedSumFront out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < trees.size() && !dominated; ++j)
      dominated = j != i && strictly_dominates(weights[j], weights[i]);
    if (!dominated) {
      out.trees.push_back(trees[i]);
      out.tree_weights.push_back(weights[i]);
      out.front.push_back(weights[i]);
    }
  }
  std::sort(out.front.begin(), out.front.end());
  out.front.erase(std::unique(out.front.begin(), out.front.end()),
                  out.front.end());
  return out;
}

}  // namespace momst
