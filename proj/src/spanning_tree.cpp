#include "momst/spanning_tree.hpp"

#include <algorithm>

#include "momst/errors.hpp"

namespace momst {

SpanningTree SpanningTree::of_edges(const Graph& g, std::vector<EdgeId> ids) {
  const int n = g.num_vertices();
  if (static_cast<int>(ids.size()) != n - 1)
    throw UsageError("a spanning tree needs exactly n-1 edges");
  SpanningTree t;
  t.member_.assign(g.num_edges(), 0);
  t.adj_.assign(n, {});
  for (EdgeId id : ids) {
    if (id < 0 || id >= g.num_edges()) throw UsageError("edge id out of range");
    if (t.member_[id]) throw UsageError("duplicate edge id in spanning tree");
    t.member_[id] = 1;
    const Edge& e = g.edge(id);
    t.adj_[e.u].push_back({e.v, id});
    t.adj_[e.v].push_back({e.u, id});
  }
  t.ids_ = std::move(ids);
  std::sort(t.ids_.begin(), t.ids_.end());
  // n-1 edges and connected <=> spanning tree
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const IncidentEdge& ie : t.adj_[v])
      if (!seen[ie.to]) {
        seen[ie.to] = 1;
        ++count;
        stack.push_back(ie.to);
      }
  }
  if (count != n) throw UsageError("edge set does not span the graph");
  return t;
}

std::vector<EdgeId> SpanningTree::sorted_edge_ids() const { return ids_; }

void SpanningTree::path_edges(int u, int v, std::vector<EdgeId>& out) const {
  out.clear();
  const int n = num_vertices();
  // Iterative DFS over the tree; parent_vertex[x] == -2 means unvisited.
  thread_local std::vector<int> parent_vertex;
  thread_local std::vector<EdgeId> parent_edge;
  thread_local std::vector<int> stack;
  parent_vertex.assign(n, -2);
  parent_edge.assign(n, -1);
  stack.clear();
  stack.push_back(u);
  parent_vertex[u] = -1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) break;
    for (const IncidentEdge& ie : adj_[x]) {
      if (parent_vertex[ie.to] == -2) {
        parent_vertex[ie.to] = x;
        parent_edge[ie.to] = ie.edge;
        stack.push_back(ie.to);
      }
    }
  }
  for (int x = v; x != u; x = parent_vertex[x]) out.push_back(parent_edge[x]);
  std::reverse(out.begin(), out.end());
}

void SpanningTree::exchange(const Graph& g, EdgeId out_id, EdgeId in_id) {
  member_[out_id] = 0;
  member_[in_id] = 1;
  ids_.erase(std::lower_bound(ids_.begin(), ids_.end(), out_id));
  ids_.insert(std::lower_bound(ids_.begin(), ids_.end(), in_id), in_id);
  auto detach = [&](int vertex) {
    auto& lst = adj_[vertex];
    for (auto it = lst.begin(); it != lst.end(); ++it)
      if (it->edge == out_id) {
        *it = lst.back();
        lst.pop_back();
        return;
      }
  };
  const Edge& removed = g.edge(out_id);
  detach(removed.u);
  detach(removed.v);
  const Edge& added = g.edge(in_id);
  adj_[added.u].push_back({added.v, in_id});
  adj_[added.v].push_back({added.u, in_id});
}

WeightVec tree_weight(const Graph& g, const SpanningTree& t) {
  if (t.num_graph_edges() != g.num_edges() ||
      t.num_vertices() != g.num_vertices())
    throw UsageError("tree does not belong to this graph");
  WeightVec sum = WeightVec::zero(g.weight_dim());
  for (EdgeId id : t.edge_ids()) sum += g.edge(id).w;
  return sum;
}

bool is_spanning_tree(const Graph& g, const std::vector<EdgeId>& ids) {
  if (static_cast<int>(ids.size()) != g.num_vertices() - 1) return false;
  std::vector<char> used(g.num_edges(), 0);
  for (EdgeId id : ids) {
    if (id < 0 || id >= g.num_edges() || used[id]) return false;
    used[id] = 1;
  }
  // union-find connectivity
  std::vector<int> parent(g.num_vertices());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = g.num_vertices();
  for (EdgeId id : ids) {
    int a = find(g.edge(id).u), b = find(g.edge(id).v);
    if (a == b) return false;
    parent[a] = b;
    --components;
  }
  return components == 1;
}

void insert_and_break_cycle_in_place(const Graph& g, SpanningTree& t, EdgeId e,
                                     Rng& rng) {
  if (t.contains(e)) return;  // inserting a tree edge changes nothing
  const Edge& ed = g.edge(e);
  thread_local std::vector<EdgeId> cycle;
  t.path_edges(ed.u, ed.v, cycle);
  cycle.push_back(e);  // the inserted edge closes the cycle
  EdgeId drop = cycle[rng.uniform_index(cycle.size())];
  if (drop == e) return;  // dropped the edge we just inserted
  t.exchange(g, drop, e);
}

SpanningTree insert_and_break_cycle(const Graph& g, SpanningTree t, EdgeId e,
                                    Rng& rng) {
  insert_and_break_cycle_in_place(g, t, e, rng);
  return t;
}

SpanningTree random_spanning_tree(const Graph& g, Rng& rng) {
  const int n = g.num_vertices();
  std::vector<char> visited(n, 0);
  std::vector<EdgeId> ids;
  ids.reserve(n - 1);
  int v = static_cast<int>(rng.uniform_index(n));
  visited[v] = 1;
  int seen = 1;
  while (seen < n) {
    const auto& nb = g.neighbors(v);
    const IncidentEdge& step = nb[rng.uniform_index(nb.size())];
    if (!visited[step.to]) {
      visited[step.to] = 1;
      ++seen;
      ids.push_back(step.edge);
    }
    v = step.to;
  }
  return SpanningTree::of_edges(g, std::move(ids));
}

}  // namespace momst
