#include "momst/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "momst/errors.hpp"
#include "momst/rng.hpp"

namespace momst {

const char* family_name(Family f) {
  switch (f) {
    case Family::g1: return "g1";
    case Family::g2: return "g2";
    case Family::lollipop: return "lollipop";
    case Family::g1m: return "g1m";
    case Family::g2m: return "g2m";
    case Family::ceg: return "ceg";
    case Family::deg: return "deg";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::g1, Family::g2, Family::lollipop, Family::g1m,
                   Family::g2m, Family::ceg, Family::deg})
    if (name == family_name(f)) return f;
  throw UsageError("unknown family: " + name);
}

const char* weight_model_name(WeightModel m) {
  return m == WeightModel::rndrnd ? "rndrnd" : "eucrnd";
}

WeightModel weight_model_from_name(const std::string& name) {
  if (name == "rndrnd") return WeightModel::rndrnd;
  if (name == "eucrnd") return WeightModel::eucrnd;
  throw UsageError("unknown weight model: " + name);
}

std::string InstanceSpec::label() const {
  std::string s = family_name(family);
  if (family == Family::ceg || family == Family::deg)
    s += std::string("-") + weight_model_name(weights);
  s += "-n" + std::to_string(n);
  if (family == Family::ceg || family == Family::deg)
    s += "-s" + std::to_string(seed);
  return s;
}

bool is_tailed_family(Family f) {
  return f == Family::g1 || f == Family::g2 || f == Family::g1m ||
         f == Family::g2m;
}

namespace {

void check_tailed_n(int n) {
  if (n < 8 || n % 4 != 0)
    throw UsageError("triangle-chain families need n >= 8 with n = 0 mod 4 (n=" +
                     std::to_string(n) + ")");
}

// Shared triangle-chain topology. Tail vertices 0..2*eta, the last of which
// (vertex 2*eta) is the first clique vertex; clique vertices
// 2*eta .. 2*eta + n/2 - 1. Edge ids: per triangle i the two upper edges
// (2i,2i+1), (2i+1,2i+2) then the bottom edge (2i,2i+2); afterwards the
// clique pairs in lexicographic order.
struct Topology {
  int eta, nu, first_clique;
  std::vector<std::pair<int, int>> tail;    // 3 per triangle: up, up, bottom
  std::vector<std::pair<int, int>> clique;  // lexicographic
};

Topology tailed_topology(int n) {
  Topology t;
  t.eta = n / 4;
  t.nu = n / 2;
  t.first_clique = 2 * t.eta;
  for (int i = 0; i < t.eta; ++i) {
    t.tail.emplace_back(2 * i, 2 * i + 1);
    t.tail.emplace_back(2 * i + 1, 2 * i + 2);
    t.tail.emplace_back(2 * i, 2 * i + 2);
  }
  for (int x = t.first_clique; x < t.first_clique + t.nu; ++x)
    for (int y = x + 1; y < t.first_clique + t.nu; ++y)
      t.clique.emplace_back(x, y);
  return t;
}

TriangularTailed assemble(Family f, int n, const Topology& topo,
                          const std::vector<Edge>& edges, double a, double u,
                          double k, int l, std::vector<EdgeId> gs) {
  TriangularTailed inst{f,
                        n,
                        topo.eta,
                        a,
                        u,
                        k,
                        l,
                        Graph(n, edges.front().w.dim(), edges),
                        {},
                        {},
                        {},
                        std::move(gs)};
  for (int i = 0; i < topo.eta; ++i) {
    inst.upper_edges.push_back(3 * i);
    inst.upper_edges.push_back(3 * i + 1);
    inst.bottom_edges.push_back(3 * i + 2);
  }
  for (std::size_t j = 0; j < topo.clique.size(); ++j)
    inst.clique_edges.push_back(static_cast<EdgeId>(3 * topo.eta + j));
  return inst;
}

}  // namespace

TriangularTailed gen_triangular_tailed(Family f, int n) {
  if (f != Family::g1 && f != Family::g2)
    throw UsageError("gen_triangular_tailed handles g1 and g2 only");
  check_tailed_n(n);
  const Topology topo = tailed_topology(n);
  const double a = static_cast<double>(n) * n;
  const double clique_w = f == Family::g1 ? 4 * a : a;
  std::vector<Edge> edges;
  for (int i = 0; i < topo.eta; ++i) {
    edges.push_back({topo.tail[3 * i].first, topo.tail[3 * i].second,
                     WeightVec(2 * a)});
    edges.push_back({topo.tail[3 * i + 1].first, topo.tail[3 * i + 1].second,
                     WeightVec(2 * a)});
    edges.push_back({topo.tail[3 * i + 2].first, topo.tail[3 * i + 2].second,
                     WeightVec(3 * a)});
  }
  for (auto [x, y] : topo.clique) edges.push_back({x, y, WeightVec(clique_w)});
  return assemble(f, n, topo, edges, a, 0.0, clique_w, 0, {});
}

TriangularTailed gen_triangular_tailed_mo(Family f, int n, int l, double u,
                                          double k) {
  if (f != Family::g1m && f != Family::g2m)
    throw UsageError("gen_triangular_tailed_mo handles g1m and g2m only");
  check_tailed_n(n);
  const Topology topo = tailed_topology(n);
  if (f == Family::g1m) {
    if (k < 0) k = 3.0;
    if (k <= 2)
      throw UsageError("g1m requires k > 2 (k=" + std::to_string(k) + ")");
    l = 0;
    u = 0.0;
  } else {
    if (l < 0) l = topo.nu - 1;
    if (l < 1 || l > topo.nu - 1)
      throw UsageError("g2m requires 1 <= l <= n/2 - 1 (l=" +
                       std::to_string(l) + ")");
    if (u <= 2)
      throw UsageError("g2m requires u > 2 (u=" + std::to_string(u) + ")");
    if (k < 0) k = u + n + 2;
    if (k <= u + n + 1)
      throw UsageError("g2m requires k > u + n + 1 (k=" + std::to_string(k) +
                       ", u=" + std::to_string(u) +
                       ", n=" + std::to_string(n) + ")");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < topo.eta; ++i) {
    edges.push_back({topo.tail[3 * i].first, topo.tail[3 * i].second,
                     WeightVec(1, 2)});
    edges.push_back({topo.tail[3 * i + 1].first, topo.tail[3 * i + 1].second,
                     WeightVec(1, 2)});
    edges.push_back({topo.tail[3 * i + 2].first, topo.tail[3 * i + 2].second,
                     WeightVec(2, 1)});
  }
  std::vector<EdgeId> gs;
  for (std::size_t j = 0; j < topo.clique.size(); ++j) {
    auto [x, y] = topo.clique[j];
    // g2m: the path over the first l+1 clique vertices gets weight (u,u)
    const bool on_path =
        f == Family::g2m && y == x + 1 && (x - topo.first_clique) < l;
    if (on_path) gs.push_back(static_cast<EdgeId>(3 * topo.eta + j));
    const double w = on_path ? u : k;
    edges.push_back({x, y, WeightVec(w, w)});
  }
  return assemble(f, n, topo, edges, 0.0, u, k, l, std::move(gs));
}

Graph gen_lollipop(int n) {
  if (n < 6 || n % 2 != 0)
    throw UsageError("lollipop needs even n >= 6 (n=" + std::to_string(n) +
                     ")");
  const int nu = n / 2;
  std::vector<Edge> edges;
  for (int x = 0; x < nu; ++x)
    for (int y = x + 1; y < nu; ++y) edges.push_back({x, y, WeightVec(1)});
  // path of n/2 edges hanging off clique vertex nu-1
  for (int i = 0; i < nu; ++i) {
    const int from = i == 0 ? nu - 1 : nu + i - 1;
    edges.push_back({from, nu + i, WeightVec(2)});
  }
  return Graph(n, 1, std::move(edges));
}

namespace {

struct Pt {
  double x, y;
};

double orient(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// d strictly inside the circumcircle of CCW triangle (a,b,c)?
bool in_circumcircle(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  const double ax = a.x - d.x, ay = a.y - d.y;
  const double bx = b.x - d.x, by = b.y - d.y;
  const double cx = c.x - d.x, cy = c.y - d.y;
  const double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                     (bx * bx + by * by) * (ax * cy - cx * ay) +
                     (cx * cx + cy * cy) * (ax * by - bx * ay);
  return det > 0;
}

// Incremental Bowyer-Watson triangulation; returns edges between real
// points (pairs with first < second). Assumes points in general position
// (the caller jitters them).
std::vector<std::pair<int, int>> delaunay_edges(std::vector<Pt> pts) {
  const int n = static_cast<int>(pts.size());
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Pt& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double mid_x = (lo_x + hi_x) / 2, mid_y = (lo_y + hi_y) / 2;
  pts.push_back({mid_x - 30 * span, mid_y - 10 * span});
  pts.push_back({mid_x + 30 * span, mid_y - 10 * span});
  pts.push_back({mid_x, mid_y + 30 * span});

  struct Tri {
    int a, b, c;
  };
  std::vector<Tri> tris{{n, n + 1, n + 2}};
  if (orient(pts[n], pts[n + 1], pts[n + 2]) < 0) std::swap(tris[0].b, tris[0].c);

  std::vector<char> bad;
  for (int p = 0; p < n; ++p) {
    bad.assign(tris.size(), 0);
    std::map<std::pair<int, int>, int> edge_count;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (in_circumcircle(pts[tris[t].a], pts[tris[t].b], pts[tris[t].c],
                          pts[p])) {
        bad[t] = 1;
        for (auto [x, y] : {std::pair{tris[t].a, tris[t].b},
                            std::pair{tris[t].b, tris[t].c},
                            std::pair{tris[t].c, tris[t].a}})
          ++edge_count[{std::min(x, y), std::max(x, y)}];
      }
    }
    std::vector<Tri> next;
    for (std::size_t t = 0; t < tris.size(); ++t)
      if (!bad[t]) next.push_back(tris[t]);
    for (const auto& [e, cnt] : edge_count) {
      if (cnt != 1) continue;  // interior edge of the cavity
      Tri t{e.first, e.second, p};
      if (orient(pts[t.a], pts[t.b], pts[t.c]) < 0) std::swap(t.b, t.c);
      next.push_back(t);
    }
    tris = std::move(next);
  }

  std::set<std::pair<int, int>> edges;
  for (const Tri& t : tris) {
    if (t.a >= n || t.b >= n || t.c >= n) continue;  // touches the super-triangle
    for (auto [x, y] :
         {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}})
      edges.insert({std::min(x, y), std::max(x, y)});
  }
  return {edges.begin(), edges.end()};
}

}  // namespace

Graph gen_random(Family f, WeightModel weights, int n, std::uint64_t seed) {
  if (f != Family::ceg && f != Family::deg)
    throw UsageError("gen_random handles ceg and deg only");
  if (n < 3) throw UsageError("random geometric instances need n >= 3");
  Rng rng(seed);
  // Draw order is part of the reproducibility contract: first the n points
  // (x then y), then the n jitters (dx then dy), then per edge in id order
  // the random weight components.
  std::vector<Pt> pts(n);
  for (Pt& p : pts) {
    p.x = rng.uniform_real(0.0, 100.0);
    p.y = rng.uniform_real(0.0, 100.0);
  }
  for (Pt& p : pts) {
    p.x += rng.uniform_real(-1e-9, 1e-9);
    p.y += rng.uniform_real(-1e-9, 1e-9);
  }
  std::vector<std::pair<int, int>> pairs;
  if (f == Family::ceg) {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  } else {
    pairs = delaunay_edges(pts);
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [x, y] : pairs) {
    const double dx = pts[x].x - pts[y].x, dy = pts[x].y - pts[y].y;
    const double w1 = weights == WeightModel::eucrnd
                          ? std::sqrt(dx * dx + dy * dy)
                          : rng.uniform_real(5.0, 200.0);
    const double w2 = rng.uniform_real(5.0, 200.0);
    edges.push_back({x, y, WeightVec(w1, w2)});
  }
  return Graph(n, 2, std::move(edges));
}

Graph generate(const InstanceSpec& spec) {
  if (is_tailed_family(spec.family)) return generate_tailed(spec).graph;
  if (spec.family == Family::lollipop) return gen_lollipop(spec.n);
  return gen_random(spec.family, spec.weights, spec.n, spec.seed);
}

TriangularTailed generate_tailed(const InstanceSpec& spec) {
  if (spec.family == Family::g1 || spec.family == Family::g2)
    return gen_triangular_tailed(spec.family, spec.n);
  if (spec.family == Family::g1m || spec.family == Family::g2m)
    return gen_triangular_tailed_mo(spec.family, spec.n, spec.l, spec.u,
                                    spec.k);
  throw UsageError("not a triangle-chain family: " +
                   std::string(family_name(spec.family)));
}

double family_mst_weight(const TriangularTailed& inst) {
  if (inst.family != Family::g1 && inst.family != Family::g2)
    throw UsageError("family_mst_weight applies to g1/g2");
  const int nu = inst.n / 2;
  // all 2*eta upper edges + any clique spanning tree
  return 2 * inst.a * 2 * inst.eta + (nu - 1) * inst.k;
}

std::vector<WeightVec> family_pareto_front(const TriangularTailed& inst) {
  if (inst.family != Family::g1m && inst.family != Family::g2m)
    throw UsageError("family_pareto_front applies to g1m/g2m");
  const int nu = inst.n / 2;
  const double clique = inst.family == Family::g1m
                            ? (nu - 1) * inst.k
                            : inst.l * inst.u + (nu - 1 - inst.l) * inst.k;
  std::vector<WeightVec> front;
  // tail contributes (3*eta - r, 3*eta + r), r = number of triangles using
  // both upper edges; ascending first component = descending r
  for (int r = inst.eta; r >= 0; --r)
    front.emplace_back(clique + 3 * inst.eta - r, clique + 3 * inst.eta + r);
  return front;
}

namespace {

int count_contained(const TriangularTailed& inst, const SpanningTree& t,
                    const std::vector<EdgeId>& ids) {
  if (t.num_graph_edges() != inst.graph.num_edges() ||
      t.num_vertices() != inst.graph.num_vertices())
    throw UsageError("tree does not belong to this instance");
  int c = 0;
  for (EdgeId e : ids) c += t.contains(e) ? 1 : 0;
  return c;
}

}  // namespace

int bad_edge_count(const TriangularTailed& inst, const SpanningTree& t) {
  if (!is_tailed_family(inst.family))
    throw UsageError("bad_edge_count applies to triangle-chain instances");
  return count_contained(inst, t, inst.bottom_edges);
}

int s_count(const TriangularTailed& inst, const SpanningTree& t) {
  if (inst.family != Family::g2m)
    throw UsageError("s_count applies to g2m instances");
  return count_contained(inst, t, inst.gs_edges);
}

}  // namespace momst
