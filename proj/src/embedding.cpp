#include "graphforms/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace graphforms {

namespace {

// Dart from u toward its neighbour v.
int dart_of(const Graph& g, int u, int v) {
  int e = g.edge_index(u, v);
  if (e < 0) throw Error("rotation refers to a non-edge");
  return 2 * e + (u < v ? 0 : 1);
}

std::vector<std::vector<int>> neighbor_order(const RotationSystem& r) {
  std::vector<std::vector<int>> out(r.graph.order());
  for (int v = 0; v < r.graph.order(); ++v)
    for (int d : r.rotation[v]) out[v].push_back(r.head(d));
  return out;
}

}  // namespace

int RotationSystem::tail(int dart) const {
  const auto& e = graph.edges().at(dart / 2);
  return dart % 2 ? e.second : e.first;
}

int RotationSystem::head(int dart) const {
  const auto& e = graph.edges().at(dart / 2);
  return dart % 2 ? e.first : e.second;
}

void RotationSystem::validate() const {
  if (static_cast<int>(rotation.size()) != graph.order()) throw Error("rotation needs one cycle per vertex");
  std::vector<int> seen(2 * graph.size(), 0);
  for (int v = 0; v < graph.order(); ++v) {
    if (static_cast<int>(rotation[v].size()) != graph.degree(v)) {
      throw Error("rotation at vertex " + std::to_string(v) + " does not list every incident dart");
    }
    for (int d : rotation[v]) {
      if (d < 0 || d >= 2 * graph.size() || tail(d) != v || seen[d]++) {
        throw Error("invalid dart " + std::to_string(d) + " in rotation at vertex " + std::to_string(v));
      }
    }
  }
}

RotationSystem RotationSystem::from_neighbor_order(const Graph& g, const std::vector<std::vector<int>>& order) {
  if (static_cast<int>(order.size()) != g.order()) throw Error("neighbour order needs one list per vertex");
  RotationSystem r{g, std::vector<std::vector<int>>(g.order())};
  for (int v = 0; v < g.order(); ++v)
    for (int w : order[v]) r.rotation[v].push_back(dart_of(g, v, w));
  r.validate();
  return r;
}

RotationSystem RotationSystem::from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy) {
  if (static_cast<int>(xy.size()) != g.order()) throw Error("one coordinate per vertex required");
  std::vector<std::vector<int>> order(g.order());
  for (int v = 0; v < g.order(); ++v) {
    order[v] = g.neighbors(v);
    auto angle = [&](int w) { return std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first); };
    std::sort(order[v].begin(), order[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }
  return from_neighbor_order(g, order);
}

nlohmann::json RotationSystem::to_json() const {
  nlohmann::json j;
  j["n"] = graph.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : graph.edges()) j["edges"].push_back({u, v});
  j["rotation"] = rotation;
  return j;
}

RotationSystem RotationSystem::from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Graph g(j.at("n").get<int>(), edges);
    RotationSystem r{g, j.at("rotation").get<std::vector<std::vector<int>>>()};
    r.validate();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("rotation json: ") + e.what());
  }
}

EmbeddingReport trace_faces(const RotationSystem& r) {
  r.validate();
  const Graph& g = r.graph;
  if (g.order() == 0 || !g.connected()) throw Error("face tracing needs a connected graph");
  const int darts = 2 * g.size();
  // successor of each dart within the rotation at its tail
  std::vector<int> next_in_rotation(darts);
  for (int v = 0; v < g.order(); ++v) {
    const auto& rot = r.rotation[v];
    for (size_t i = 0; i < rot.size(); ++i) next_in_rotation[rot[i]] = rot[(i + 1) % rot.size()];
  }
  EmbeddingReport rep;
  rep.face_of_dart.assign(darts, -1);
  for (int d0 = 0; d0 < darts; ++d0) {
    if (rep.face_of_dart[d0] >= 0) continue;
    std::vector<int> face;
    int d = d0;
    do {
      rep.face_of_dart[d] = static_cast<int>(rep.faces.size());
      face.push_back(d);
      d = next_in_rotation[d ^ 1];
    } while (d != d0);
    rep.faces.push_back(std::move(face));
  }
  const int f = static_cast<int>(rep.faces.size());
  const int chi = g.order() - g.size() + f;
  if ((2 - chi) % 2 != 0 || chi > 2) throw Error("non-integral genus; rotation is corrupted");
  rep.genus = (2 - chi) / 2;
  rep.dual.n = f;
  for (int e = 0; e < g.size(); ++e) rep.dual.edges.emplace_back(rep.face_of_dart[2 * e], rep.face_of_dart[2 * e + 1]);
  return rep;
}

nlohmann::json EmbeddingReport::to_json() const {
  nlohmann::json j;
  j["genus"] = genus;
  j["faces"] = faces;
  j["dual"] = {{"n", dual.n}, {"edges", nlohmann::json::array()}};
  for (auto [a, b] : dual.edges) j["dual"]["edges"].push_back({a, b});
  return j;
}

RotationSystem glue_cycle_along_edge(const RotationSystem& r, int x, int y, int length) {
  if (length < 2) throw Error("glued path needs at least two edges");
  if (!r.graph.has_edge(x, y)) throw Error("gluing edge not present");
  auto order = neighbor_order(r);
  const int n = r.graph.order();
  const int fresh = length - 1;
  std::vector<Edge> edges = r.graph.edges();
  std::vector<int> path{x};
  for (int i = 0; i < fresh; ++i) path.push_back(n + i);
  path.push_back(y);
  for (size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
  Graph g(n + fresh, edges);
  order.resize(n + fresh);
  for (int i = 0; i < fresh; ++i) order[n + i] = {path[i], path[i + 2]};
  // At y the new dart follows y->x; at x it precedes x->y.
  auto& oy = order[y];
  oy.insert(std::find(oy.begin(), oy.end(), x) + 1, path[path.size() - 2]);
  auto& ox = order[x];
  ox.insert(std::find(ox.begin(), ox.end(), y), path[1]);
  return RotationSystem::from_neighbor_order(g, order);
}

bool multigraph_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  if (a.n > 12) throw Error("multigraph isomorphism is capped at 12 vertices");
  auto ma = a.multiplicity_matrix(), mb = b.multiplicity_matrix();
  const int n = a.n;
  auto signature = [n](const std::vector<std::vector<int>>& m, int v) {
    std::vector<int> row(m[v]);
    std::sort(row.begin(), row.end());
    row.push_back(m[v][v]);
    return row;
  };
  std::vector<std::vector<int>> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = signature(ma, v);
    sb[v] = signature(mb, v);
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w] || ma[v][v] != mb[w][w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = ma[u][v] == mb[map[u]][w];
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(0);
}

bool dual_isomorphic(const EmbeddingReport& a, const EmbeddingReport& b) {
  return multigraph_isomorphic(a.dual, b.dual);
}

}  // namespace graphforms
