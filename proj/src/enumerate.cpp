#include "graphforms/enumerate.hpp"

#include <functional>

namespace graphforms {

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() <= 10) return brute_force_isomorphic(a, b);
  return find_isomorphism(a, b).has_value();
}

}  // namespace

bool IsoClassSet::insert(const Graph& g) {
  auto& bucket = buckets_[invariant_hash(g)];
  for (int i : bucket)
    if (isomorphic(graphs_[i], g)) return false;
  bucket.push_back(static_cast<int>(graphs_.size()));
  graphs_.push_back(g);
  return true;
}

std::vector<Graph> enumerate_cubic(int n) {
  if (n < 4 || n % 2 || n > 8) throw Error("enumerate_cubic supports even n in [4, 8]");
  IsoClassSet out;
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  // Fill the lowest deficient vertex with partners in increasing order.
  std::function<void(int, int)> extend = [&](int v, int min_w) {
    while (v < n && deg[v] == 3) {
      ++v;
      min_w = v + 1;
    }
    if (v == n) {
      out.insert(Graph(n, edges));
      return;
    }
    for (int w = std::max(min_w, v + 1); w < n; ++w) {
      if (deg[w] == 3 || adj[v][w]) continue;
      adj[v][w] = adj[w][v] = 1;
      ++deg[v];
      ++deg[w];
      edges.emplace_back(v, w);
      extend(v, w + 1);
      edges.pop_back();
      --deg[v];
      --deg[w];
      adj[v][w] = adj[w][v] = 0;
    }
  };
  extend(0, 1);
  return out.graphs();
}

std::vector<Graph> enumerate_edge_deletions(int n, int m) {
  if (n < 1 || n > 7) throw Error("enumerate_edge_deletions supports 1 <= n <= 7");
  if (m < 0 || m > n * (n - 1) / 2) throw Error("cannot delete that many edges");
  // Every graph with m deletions is a one-edge deletion of one with m - 1.
  std::vector<Graph> level{complete_graph(n)};
  for (int step = 0; step < m; ++step) {
    IsoClassSet next;
    for (const auto& g : level)
      for (auto [u, v] : g.edges()) next.insert(g.without_edge(u, v));
    level = next.graphs();
  }
  return level;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 10) throw Error("enumerate_trees supports 1 <= n <= 10");
  std::vector<Graph> level{Graph(1)};
  for (int k = 1; k < n; ++k) {
    IsoClassSet next;
    for (const auto& t : level) {
      for (int v = 0; v < k; ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, k);
        next.insert(Graph(k + 1, edges));
      }
    }
    level = next.graphs();
  }
  return level;
}

}  // namespace graphforms
