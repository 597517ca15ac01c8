#include "graphforms/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace graphforms {

Graph::Graph(int n) {
  if (n < 0) throw Error("negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << ", " << v << ") out of range for " << n << " vertices";
      throw Error(msg.str());
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error("repeated edge");
  }
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != order()) {
    throw Error("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

Graph Graph::without_edge(int u, int v) const {
  int idx = edge_index(u, v);
  if (idx < 0) throw Error("edge not present");
  std::vector<Edge> e = edges_;
  e.erase(e.begin() + idx);
  return Graph(order(), e);
}

Graph Graph::with_edge(int u, int v) const {
  std::vector<Edge> e = edges_;
  e.emplace_back(u, v);
  return Graph(order(), e);
}

Graph Graph::complement() const {
  std::vector<Edge> e;
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (!has_edge(u, v)) e.emplace_back(u, v);
  return Graph(order(), e);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != order()) throw Error("permutation size mismatch");
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return Graph(order(), e);
}

std::vector<int> Graph::component_ids(int* count) const {
  std::vector<int> comp(order(), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool Graph::connected() const {
  int c = 0;
  component_ids(&c);
  return c <= 1;
}

std::vector<std::vector<int>> MultiGraph::multiplicity_matrix() const {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("multigraph edge out of range");
    if (u == v) {
      ++m[u][u];
    } else {
      ++m[u][v];
      ++m[v][u];
    }
  }
  return m;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), e);
}

Graph line_graph(const Graph& g) {
  const auto& ge = g.edges();
  std::vector<Edge> e;
  for (int i = 0; i < static_cast<int>(ge.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(ge.size()); ++j) {
      auto [a, b] = ge[i];
      auto [c, d] = ge[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
    }
  return Graph(static_cast<int>(ge.size()), e);
}

Graph seidel_switch(const Graph& g, const std::vector<int>& subset) {
  std::vector<char> in(g.order(), 0);
  for (int v : subset) {
    if (v < 0 || v >= g.order()) throw Error("switching set vertex out of range");
    in[v] = 1;
  }
  std::vector<Edge> e;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      bool adj = g.has_edge(u, v);
      if (in[u] != in[v]) adj = !adj;
      if (adj) e.emplace_back(u, v);
    }
  return Graph(g.order(), e);
}

Graph wedge_sum(const Graph& g1, int x, const Graph& g2, int y) {
  if (x < 0 || x >= g1.order() || y < 0 || y >= g2.order()) {
    throw Error("wedge vertex out of range");
  }
  // g2 vertex w maps to x if w == y, else to n1 + (w < y ? w : w - 1).
  int n1 = g1.order();
  auto map2 = [&](int w) { return w == y ? x : n1 + (w < y ? w : w - 1); };
  std::vector<Edge> e = g1.edges();
  for (auto [u, v] : g2.edges()) e.emplace_back(map2(u), map2(v));
  return Graph(n1 + g2.order() - 1, e);
}

Graph bridge_join(const Graph& g1, int x, const Graph& g2, int y) {
  if (x < 0 || x >= g1.order() || y < 0 || y >= g2.order()) {
    throw Error("bridge vertex out of range");
  }
  Graph u = disjoint_union(g1, g2);
  return u.with_edge(x, y + g1.order());
}

}  // namespace graphforms
