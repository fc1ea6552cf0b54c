#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "momst/errors.hpp"
#include "momst/generators.hpp"
#include "momst/graph.hpp"
#include "momst/oracles.hpp"
#include "momst/rank_bias.hpp"

using namespace momst;

namespace {

std::string graph_text(const Graph& g) {
  std::ostringstream out;
  g.write(out);
  return out.str();
}

double w1_tree_weight(const Graph& g) {
  std::vector<double> key(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) key[e] = g.edge(e).w[0];
  SpanningTree t = kruskal_by_key(g, key);
  double sum = 0.0;
  for (EdgeId e : t.edge_ids()) sum += g.edge(e).w[0];
  return sum;
}

}  // namespace

TEST_CASE("family and weight-model names round-trip") {
  for (Family f : {Family::g1, Family::g2, Family::lollipop, Family::g1m,
                   Family::g2m, Family::ceg, Family::deg})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("nope"), UsageError);
  for (WeightModel m : {WeightModel::rndrnd, WeightModel::eucrnd})
    CHECK(weight_model_from_name(weight_model_name(m)) == m);
  CHECK_THROWS_AS(weight_model_from_name("euclid"), UsageError);
}

TEST_CASE("instance labels identify family, size, and randomness") {
  CHECK(InstanceSpec{Family::g1, 32}.label() == "g1-n32");
  CHECK(InstanceSpec{Family::lollipop, 8}.label() == "lollipop-n8");
  CHECK(InstanceSpec{Family::g2m, 12}.label() == "g2m-n12");
  CHECK(InstanceSpec{Family::ceg, 25, WeightModel::rndrnd, -1, 3.0, -1.0, 42}
            .label() == "ceg-rndrnd-n25-s42");
  CHECK(InstanceSpec{Family::deg, 100, WeightModel::eucrnd, -1, 3.0, -1.0, 7}
            .label() == "deg-eucrnd-n100-s7");
}

TEST_CASE("triangle-chain structure: counts, topology, junction vertex") {
  for (Family f : {Family::g1, Family::g2}) {
    for (int n : {8, 16, 32}) {
      TriangularTailed inst = gen_triangular_tailed(f, n);
      const int eta = n / 4;
      const int nu = n / 2;
      CHECK(inst.eta == eta);
      CHECK(inst.graph.num_vertices() == n);
      CHECK(inst.graph.num_edges() == 3 * eta + nu * (nu - 1) / 2);
      CHECK(static_cast<int>(inst.upper_edges.size()) == 2 * eta);
      CHECK(static_cast<int>(inst.bottom_edges.size()) == eta);
      CHECK(static_cast<int>(inst.clique_edges.size()) == nu * (nu - 1) / 2);
      CHECK(inst.gs_edges.empty());
      // each triangle i sits on vertices {2i, 2i+1, 2i+2}
      for (int i = 0; i < eta; ++i) {
        const Edge& up1 = inst.graph.edge(inst.upper_edges[2 * i]);
        const Edge& up2 = inst.graph.edge(inst.upper_edges[2 * i + 1]);
        const Edge& bot = inst.graph.edge(inst.bottom_edges[i]);
        CHECK(up1.u == 2 * i);
        CHECK(up1.v == 2 * i + 1);
        CHECK(up2.u == 2 * i + 1);
        CHECK(up2.v == 2 * i + 2);
        CHECK(bot.u == 2 * i);
        CHECK(bot.v == 2 * i + 2);
      }
      // the clique occupies vertices 2*eta .. n-1, joined at vertex 2*eta
      std::set<int> clique_vertices;
      for (EdgeId e : inst.clique_edges) {
        clique_vertices.insert(inst.graph.edge(e).u);
        clique_vertices.insert(inst.graph.edge(e).v);
      }
      CHECK(static_cast<int>(clique_vertices.size()) == nu);
      CHECK(*clique_vertices.begin() == 2 * eta);
      CHECK(*clique_vertices.rbegin() == n - 1);
    }
  }
}

TEST_CASE("the four triangle-chain families share one topology") {
  const int n = 16;
  TriangularTailed g1 = gen_triangular_tailed(Family::g1, n);
  TriangularTailed g2 = gen_triangular_tailed(Family::g2, n);
  TriangularTailed g1m = gen_triangular_tailed_mo(Family::g1m, n);
  TriangularTailed g2m = gen_triangular_tailed_mo(Family::g2m, n);
  REQUIRE(g1.graph.num_edges() == g2.graph.num_edges());
  REQUIRE(g1.graph.num_edges() == g1m.graph.num_edges());
  REQUIRE(g1.graph.num_edges() == g2m.graph.num_edges());
  for (EdgeId e = 0; e < g1.graph.num_edges(); ++e) {
    CHECK(g1.graph.edge(e).u == g2.graph.edge(e).u);
    CHECK(g1.graph.edge(e).v == g2.graph.edge(e).v);
    CHECK(g1.graph.edge(e).u == g1m.graph.edge(e).u);
    CHECK(g1.graph.edge(e).v == g1m.graph.edge(e).v);
    CHECK(g1.graph.edge(e).u == g2m.graph.edge(e).u);
    CHECK(g1.graph.edge(e).v == g2m.graph.edge(e).v);
  }
}

TEST_CASE("single-objective chain weights and optimal values") {
  TriangularTailed g1 = gen_triangular_tailed(Family::g1, 16);
  const double a = 256.0;  // n^2
  CHECK(g1.a == a);
  for (EdgeId e : g1.upper_edges) CHECK(g1.graph.edge(e).w[0] == 2 * a);
  for (EdgeId e : g1.bottom_edges) CHECK(g1.graph.edge(e).w[0] == 3 * a);
  for (EdgeId e : g1.clique_edges) CHECK(g1.graph.edge(e).w[0] == 4 * a);
  CHECK(family_mst_weight(g1) == 44 * a);  // 11264
  CHECK(kruskal_mst(g1.graph).weight == 44 * a);

  TriangularTailed g2 = gen_triangular_tailed(Family::g2, 16);
  for (EdgeId e : g2.clique_edges) CHECK(g2.graph.edge(e).w[0] == a);
  CHECK(family_mst_weight(g2) == 23 * a);  // 5888
  CHECK(kruskal_mst(g2.graph).weight == 23 * a);

  TriangularTailed small = gen_triangular_tailed(Family::g1, 8);
  CHECK(family_mst_weight(small) == 1280.0);
  CHECK(kruskal_mst(small.graph).weight == 1280.0);
}

TEST_CASE("bi-objective chain weights and parameters") {
  TriangularTailed g1m = gen_triangular_tailed_mo(Family::g1m, 16);
  CHECK(g1m.k == 3.0);
  for (EdgeId e : g1m.upper_edges) CHECK(g1m.graph.edge(e).w == WeightVec(1, 2));
  for (EdgeId e : g1m.bottom_edges) CHECK(g1m.graph.edge(e).w == WeightVec(2, 1));
  for (EdgeId e : g1m.clique_edges) CHECK(g1m.graph.edge(e).w == WeightVec(3, 3));

  TriangularTailed g2m = gen_triangular_tailed_mo(Family::g2m, 16);
  CHECK(g2m.l == 7);  // defaults: n/2 - 1
  CHECK(g2m.u == 3.0);
  CHECK(g2m.k == 21.0);  // u + n + 2
  CHECK(static_cast<int>(g2m.gs_edges.size()) == g2m.l);
  // the (u,u) path walks the first l+1 clique vertices in order
  for (int j = 0; j < g2m.l; ++j) {
    const Edge& e = g2m.graph.edge(g2m.gs_edges[j]);
    CHECK(e.u == 2 * g2m.eta + j);
    CHECK(e.v == 2 * g2m.eta + j + 1);
    CHECK(e.w == WeightVec(3, 3));
  }
  for (EdgeId e : g2m.clique_edges) {
    const bool on_path =
        std::find(g2m.gs_edges.begin(), g2m.gs_edges.end(), e) !=
        g2m.gs_edges.end();
    if (!on_path) CHECK(g2m.graph.edge(e).w == WeightVec(21, 21));
  }
}

TEST_CASE("family fronts match the exhaustive oracle at small sizes") {
  for (Family f : {Family::g1m, Family::g2m}) {
    for (int n : {8, 12}) {
      TriangularTailed inst = gen_triangular_tailed_mo(f, n);
      const std::vector<WeightVec> family = family_pareto_front(inst);
      CHECK(static_cast<int>(family.size()) == inst.eta + 1);
      const auto exact = exact_pareto_front(inst.graph);
      REQUIRE(exact.size() == family.size());
      for (std::size_t i = 0; i < exact.size(); ++i)
        CHECK(exact[i].weight == family[i]);
    }
  }
  // the n = 8 instances of both families happen to share their front
  TriangularTailed g1m8 = gen_triangular_tailed_mo(Family::g1m, 8);
  const auto front = family_pareto_front(g1m8);
  REQUIRE(front.size() == 3);
  CHECK(front[0] == WeightVec(13, 17));
  CHECK(front[1] == WeightVec(14, 16));
  CHECK(front[2] == WeightVec(15, 15));
}

TEST_CASE("parameter validation of the constructed families") {
  CHECK_THROWS_AS(gen_triangular_tailed(Family::g1, 10), UsageError);
  CHECK_THROWS_AS(gen_triangular_tailed(Family::g2, 4), UsageError);
  CHECK_THROWS_AS(gen_triangular_tailed(Family::g1m, 16), UsageError);
  CHECK_THROWS_AS(gen_triangular_tailed_mo(Family::g1, 16), UsageError);
  CHECK_THROWS_AS(gen_triangular_tailed_mo(Family::g1m, 16, -1, 3.0, 2.0),
                  UsageError);
  CHECK_THROWS_AS(gen_triangular_tailed_mo(Family::g2m, 16, -1, 2.0, -1.0),
                  UsageError);
  CHECK_THROWS_AS(gen_triangular_tailed_mo(Family::g2m, 16, 0, 3.0, -1.0),
                  UsageError);
  CHECK_THROWS_AS(gen_triangular_tailed_mo(Family::g2m, 16, 8, 3.0, -1.0),
                  UsageError);
  // a clique weight equal to u + n + 1 is not heavy enough
  CHECK_THROWS_AS(gen_triangular_tailed_mo(Family::g2m, 16, -1, 3.0, 20.0),
                  UsageError);
  CHECK_NOTHROW(gen_triangular_tailed_mo(Family::g2m, 16, -1, 3.0, 20.5));
  CHECK_THROWS_AS(gen_lollipop(5), UsageError);
  CHECK_THROWS_AS(gen_lollipop(4), UsageError);
  CHECK_THROWS_AS(gen_random(Family::ceg, WeightModel::rndrnd, 2, 1),
                  UsageError);
  CHECK_THROWS_AS(gen_random(Family::g1, WeightModel::rndrnd, 16, 1),
                  UsageError);
  CHECK_THROWS_AS(generate_tailed(InstanceSpec{Family::lollipop, 8}),
                  UsageError);
  CHECK_THROWS_AS(
      family_mst_weight(gen_triangular_tailed_mo(Family::g1m, 8)), UsageError);
  CHECK_THROWS_AS(
      family_pareto_front(gen_triangular_tailed(Family::g1, 8)), UsageError);
}

TEST_CASE("lollipop: sizes, optimum, and the path ranks at the heavy end") {
  Graph g = gen_lollipop(8);
  CHECK(g.num_vertices() == 8);
  CHECK(g.num_edges() == 10);  // C(4,2) clique edges + 4 path edges
  CHECK(kruskal_mst(g).weight == 11.0);  // 3 clique + 4 path edges
  EdgeRanking r = rank_by_weight(g, 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).w[0] == 2.0)
      CHECK(r.rank[e] > 6);
    else
      CHECK(r.rank[e] <= 6);
  }
}

TEST_CASE("deep in the ranking, selection probabilities vanish") {
  // With ~n^2/8 clique edges ahead of them, the lollipop path edges sit at
  // ranks where the biased selection probability drops below 1e-8 once the
  // instance is large enough.
  const int n = 232;
  Graph g = gen_lollipop(n);
  EdgeRanking r = rank_by_weight(g, 0);
  SelectionDistribution d = biased_distribution(r, n);
  double max_path_prob = 0.0;
  int path_edges = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).w[0] != 2.0) continue;
    ++path_edges;
    max_path_prob = std::max(max_path_prob, d.prob(e));
  }
  CHECK(path_edges == n / 2);
  CHECK(max_path_prob < 1e-8);
  CHECK(max_path_prob > 0.0);
}

TEST_CASE("complete geometric instances: size, weight ranges, metric") {
  Graph g = gen_random(Family::ceg, WeightModel::rndrnd, 10, 3);
  CHECK(g.num_vertices() == 10);
  CHECK(g.num_edges() == 45);
  CHECK(g.weight_dim() == 2);
  for (const Edge& e : g.edges()) {
    CHECK(e.w[0] >= 5.0);
    CHECK(e.w[0] <= 200.0);
    CHECK(e.w[1] >= 5.0);
    CHECK(e.w[1] <= 200.0);
  }

  Graph euc = gen_random(Family::ceg, WeightModel::eucrnd, 12, 4);
  std::vector<std::vector<double>> dist(12, std::vector<double>(12, 0.0));
  for (const Edge& e : euc.edges()) {
    CHECK(e.w[0] > 0.0);
    CHECK(e.w[0] <= std::sqrt(2.0) * 100.0 + 1e-6);
    dist[e.u][e.v] = dist[e.v][e.u] = e.w[0];
  }
  // first components obey the triangle inequality: they are distances
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      for (int c = 0; c < 12; ++c)
        if (a != b && b != c && a != c)
          CHECK(dist[a][b] <= dist[a][c] + dist[c][b] + 1e-9);
}

TEST_CASE("triangulated instances stay planar-size and build reliably") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = gen_random(Family::deg, WeightModel::rndrnd, 100, seed);
    CHECK(g.num_vertices() == 100);
    CHECK(g.num_edges() <= 3 * 100 - 6);
    CHECK(g.num_edges() >= 99);
  }
}

TEST_CASE("triangulation preserves the light spanning tree of the point set") {
  // The euclidean minimum spanning tree is a subgraph of the Delaunay
  // triangulation, so restricted to first components both instance kinds
  // have the same optimum for the same seed.
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Graph full = gen_random(Family::ceg, WeightModel::eucrnd, 40, seed);
    Graph tri = gen_random(Family::deg, WeightModel::eucrnd, 40, seed);
    CHECK(w1_tree_weight(full) == doctest::Approx(w1_tree_weight(tri))
                                      .epsilon(1e-12));
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const InstanceSpec spec{Family::deg, 30, WeightModel::rndrnd, -1, 3.0, -1.0,
                          99};
  CHECK(graph_text(generate(spec)) == graph_text(generate(spec)));
  InstanceSpec other = spec;
  other.seed = 100;
  CHECK(graph_text(generate(spec)) != graph_text(generate(other)));
  CHECK(graph_text(generate(InstanceSpec{Family::g2m, 12})) ==
        graph_text(generate(InstanceSpec{Family::g2m, 12})));
}

TEST_CASE("tree statistics count the structural edges") {
  TriangularTailed g1 = gen_triangular_tailed(Family::g1, 8);
  CHECK(bad_edge_count(g1, kruskal_mst(g1.graph).tree) == 0);

  TriangularTailed g2m = gen_triangular_tailed_mo(Family::g2m, 12);
  std::vector<EdgeId> all_bottoms;
  for (int i = 0; i < g2m.eta; ++i) {
    all_bottoms.push_back(3 * i);      // first upper
    all_bottoms.push_back(3 * i + 2);  // bottom
  }
  for (EdgeId e : g2m.gs_edges) all_bottoms.push_back(e);
  SpanningTree t = SpanningTree::of_edges(g2m.graph, all_bottoms);
  CHECK(bad_edge_count(g2m, t) == g2m.eta);
  CHECK(s_count(g2m, t) == g2m.l);

  CHECK_THROWS_AS(s_count(gen_triangular_tailed_mo(Family::g1m, 8), t),
                  UsageError);
  TriangularTailed small = gen_triangular_tailed(Family::g1, 16);
  CHECK_THROWS_AS(bad_edge_count(small, t), UsageError);
}
