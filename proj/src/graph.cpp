#include "momst/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "momst/errors.hpp"
#include "momst/run_record.hpp"

namespace momst {

namespace {

void check_connected(int n, const std::vector<std::vector<IncidentEdge>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const IncidentEdge& ie : adj[v]) {
      if (!seen[ie.to]) {
        seen[ie.to] = 1;
        ++count;
        stack.push_back(ie.to);
      }
    }
  }
  if (count != n) throw InstanceError("graph is disconnected");
}

}  // namespace

Graph::Graph(int n, int weight_dim, std::vector<Edge> edges)
    : n_(n), weight_dim_(weight_dim), edges_(std::move(edges)) {
  if (n_ < 2) throw InstanceError("graph needs at least 2 vertices");
  if (weight_dim_ != 1 && weight_dim_ != 2)
    throw UsageError("weight dimension must be 1 or 2");
  adj_.assign(n_, {});
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges_.size());
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw InstanceError("edge endpoint out of range");
    if (e.u == e.v) throw InstanceError("self-loops are not allowed");
    if (e.w.dim() != weight_dim_)
      throw InstanceError("edge weight dimension differs from the graph's");
    normalized.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    adj_[e.u].push_back({e.v, static_cast<EdgeId>(id)});
    adj_[e.v].push_back({e.u, static_cast<EdgeId>(id)});
  }
  std::sort(normalized.begin(), normalized.end());
  if (std::adjacent_find(normalized.begin(), normalized.end()) !=
      normalized.end())
    throw InstanceError("duplicate edge");
  check_connected(n_, adj_);
}

double Graph::max_weight_component() const {
  double w = 0.0;
  for (const Edge& e : edges_)
    for (int i = 0; i < weight_dim_; ++i) w = std::max(w, e.w[i]);
  return w;
}

Graph Graph::read(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw InstanceError("empty graph file");
  {
    std::istringstream hs(header);
    std::string magic;
    int version = 0;
    if (!(hs >> magic >> version) || magic != "momst" || version != 1)
      throw InstanceError("expected header 'momst 1'");
  }
  int n = 0, m = 0, d = 0;
  if (!(in >> n >> m >> d)) throw InstanceError("bad size line (want: n m d)");
  if (m < 0) throw InstanceError("negative edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    Edge e;
    double w1 = 0.0, w2 = 0.0;
    if (!(in >> e.u >> e.v >> w1))
      throw InstanceError("truncated edge list");
    if (d == 2) {
      if (!(in >> w2)) throw InstanceError("missing second weight component");
      e.w = WeightVec(w1, w2);
    } else {
      e.w = WeightVec(w1);
    }
    edges.push_back(e);
  }
  return Graph(n, d, std::move(edges));
}

void Graph::write(std::ostream& out) const {
  out << "momst 1\n" << n_ << ' ' << num_edges() << ' ' << weight_dim_ << '\n';
  for (const Edge& e : edges_) {
    out << e.u << ' ' << e.v << ' ' << format_number(e.w[0]);
    if (weight_dim_ == 2) out << ' ' << format_number(e.w[1]);
    out << '\n';
  }
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open graph file: " + path);
  return read(in);
}

void Graph::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InstanceError("cannot write graph file: " + path);
  write(out);
}

}  // namespace momst
