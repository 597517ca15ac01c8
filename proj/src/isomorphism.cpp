#include <algorithm>
#include <functional>
#include <map>

#include "graphforms/graph.hpp"

namespace graphforms {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finaliser applied to the combined value
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Colour refinement with label-independent colour values.
std::vector<std::uint64_t> refine_colors(const Graph& g, int rounds) {
  const int n = g.order();
  std::vector<std::uint64_t> c(n), next(n);
  for (int v = 0; v < n; ++v) {
    int tri = 0;
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) ++tri;
    c[v] = mix(static_cast<std::uint64_t>(g.degree(v)), static_cast<std::uint64_t>(tri));
  }
  std::vector<std::uint64_t> nbc;
  for (int r = 0; r < rounds; ++r) {
    for (int v = 0; v < n; ++v) {
      nbc.clear();
      for (int w : g.neighbors(v)) nbc.push_back(c[w]);
      std::sort(nbc.begin(), nbc.end());
      std::uint64_t h = c[v];
      for (auto x : nbc) h = mix(h, x);
      next[v] = h;
    }
    c.swap(next);
  }
  return c;
}

}  // namespace

std::uint64_t invariant_hash(const Graph& g) {
  auto c = refine_colors(g, 3);
  std::sort(c.begin(), c.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(g.size()));
  for (auto x : c) h = mix(h, x);
  return h;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
  const int n = g1.order();
  if (n != g2.order() || g1.size() != g2.size()) return std::nullopt;
  const int rounds = std::min(n, 6);
  auto c1 = refine_colors(g1, rounds);
  auto c2 = refine_colors(g2, rounds);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  // Assign g1 vertices in BFS order so each step is constrained by earlier ones.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (size_t i = order.size() - 1; i < order.size(); ++i)
      for (int w : g1.neighbors(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> extend = [&](int k) -> bool {
    if (k == n) return true;
    int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || c2[w] != c1[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        int u = order[j];
        if (g1.has_edge(u, v) != g2.has_edge(map[u], w)) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(k + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool brute_force_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() > 10 || g2.order() > 10) {
    throw Error("brute_force_isomorphic is capped at 10 vertices");
  }
  return find_isomorphism(g1, g2).has_value();
}

std::vector<Block> block_decomposition(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error("block decomposition needs at least two vertices");
  if (!g.connected()) throw Error("block decomposition needs a connected graph");
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<Block> blocks;
  int timer = 0;
  auto emit = [&](Edge until) {
    std::vector<Edge> es;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      es.push_back(e);
      if (e == until) break;
    }
    std::vector<int> verts;
    for (auto [a, b] : es) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Edge> local;
    for (auto [a, b] : es) {
      int la = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), a) - verts.begin());
      int lb = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), b) - verts.begin());
      local.emplace_back(la, lb);
    }
    blocks.push_back(Block{Graph(static_cast<int>(verts.size()), local), verts});
  };
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) emit(Edge{v, w});
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(0, -1);
  return blocks;
}

std::vector<Graph> simple_components(const Graph& g) {
  std::vector<Graph> out;
  for (auto& b : block_decomposition(g)) out.push_back(b.graph);
  return out;
}

std::vector<int> cut_vertices(const Graph& g) {
  std::vector<int> count(g.order(), 0);
  for (const auto& b : block_decomposition(g))
    for (int v : b.vertices) ++count[v];
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (count[v] > 1) out.push_back(v);
  return out;
}

}  // namespace graphforms
