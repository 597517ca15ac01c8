#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graphforms/enumerate.hpp"
#include "graphforms/graph.hpp"

using namespace graphforms;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph(n, e);
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
}

TEST(Graph, FamilySizes) {
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_EQ(cycle_graph(7).size(), 7);
  EXPECT_EQ(path_graph(7).size(), 6);
  EXPECT_EQ(star_graph(5).size(), 4);
  EXPECT_EQ(dumbbell_graph(5).order(), 10);
  EXPECT_EQ(dumbbell_graph(5).size(), 2 * 10 + 2);
  EXPECT_EQ(triangular_graph(8).order(), 28);
  for (int v = 0; v < 16; ++v) {
    EXPECT_EQ(rook4x4_graph().degree(v), 6);
    EXPECT_EQ(shrikhande_graph().degree(v), 6);
  }
}

TEST(Graph, FamilySpecRoundTrip) {
  for (const std::string s : {"complete:5", "dumbbell:10", "triangular:8", "chang:2", "rook4x4"})
    EXPECT_EQ(FamilySpec::parse(s).to_string(), s);
  EXPECT_THROW(FamilySpec::parse("nonsense:3"), Error);
}

TEST(Graph, StronglyRegularParameters) {
  auto check = [](const Graph& g, int k, int lambda, int mu) {
    for (int x = 0; x < g.order(); ++x) {
      ASSERT_EQ(g.degree(x), k);
      for (int y = x + 1; y < g.order(); ++y) {
        int common = 0;
        for (int z : g.neighbors(x)) common += g.has_edge(z, y);
        EXPECT_EQ(common, g.has_edge(x, y) ? lambda : mu);
      }
    }
  };
  check(rook4x4_graph(), 6, 2, 2);
  check(shrikhande_graph(), 6, 2, 2);
  check(triangular_graph(8), 12, 6, 4);
  for (int w = 1; w <= 3; ++w) check(chang_graph(w), 12, 6, 4);
  check(paley25_graph(), 12, 5, 6);
}

TEST(Isomorphism, RelabelledGraphsAgreeWithBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 6;
    Graph g = random_graph(n, 0.5, rng);
    Graph h = g.relabeled(random_perm(n, rng));
    auto m = find_isomorphism(g, h);
    ASSERT_TRUE(m.has_value());
    for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge((*m)[u], (*m)[v]));
    EXPECT_EQ(invariant_hash(g), invariant_hash(h));
    Graph k = random_graph(n, 0.5, rng);
    EXPECT_EQ(find_isomorphism(g, k).has_value(), brute_force_isomorphic(g, k));
  }
}

TEST(Isomorphism, SrgPairsAreNotIsomorphic) {
  EXPECT_FALSE(find_isomorphism(rook4x4_graph(), shrikhande_graph()).has_value());
  for (int w = 1; w <= 3; ++w) EXPECT_FALSE(find_isomorphism(triangular_graph(8), chang_graph(w)).has_value());
  auto cfi = cfi_pair(complete_graph(4));
  EXPECT_FALSE(find_isomorphism(cfi.untwisted, cfi.twisted).has_value());
}

TEST(Blocks, SimpleComponentRecomposition) {
  // Every edge lies in exactly one block, and the blocks' edges reassemble the graph.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 8;
    Graph g = random_graph(n, 0.35, rng);
    if (!g.connected()) continue;
    auto blocks = block_decomposition(g);
    std::vector<Edge> all;
    for (const auto& b : blocks) {
      if (b.graph.order() > 2) {
        EXPECT_TRUE(cut_vertices(b.graph).empty());
        EXPECT_TRUE(b.graph.connected());
      }
      for (auto [u, v] : b.graph.edges()) {
        int a = b.vertices[u], c = b.vertices[v];
        all.push_back({std::min(a, c), std::max(a, c)});
      }
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.edges());
    // Block-cut tree: sum over blocks of (|B| - 1) = n - 1.
    int s = 0;
    for (const auto& b : blocks) s += b.graph.order() - 1;
    EXPECT_EQ(s, n - 1);
  }
}

TEST(Wedge, SizesAndIdentity) {
  Graph a = cycle_graph(4), b = complete_graph(3);
  Graph w = wedge_sum(a, 0, b, 1);
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(w.size(), 7);
  EXPECT_EQ(cut_vertices(w), std::vector<int>{0});
  Graph unit = wedge_sum(a, 2, Graph(1), 0);
  EXPECT_TRUE(find_isomorphism(unit, a).has_value());
  Graph br = bridge_join(a, 0, b, 0);
  EXPECT_EQ(br.size(), 8);
  EXPECT_TRUE(br.connected());
}

TEST(Cfi, Shape) {
  auto p = cfi_pair(complete_graph(4));
  // Each degree-3 base vertex contributes 4 + 6 vertices.
  EXPECT_EQ(p.untwisted.order(), 40);
  EXPECT_EQ(p.twisted.order(), 40);
  EXPECT_EQ(p.untwisted.size(), p.twisted.size());
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_cubic(4).size(), 1u);
  EXPECT_EQ(enumerate_cubic(6).size(), 2u);
  EXPECT_EQ(enumerate_cubic(8).size(), 6u);  // five connected plus 2K4
  EXPECT_EQ(enumerate_edge_deletions(4, 1).size(), 1u);
  EXPECT_EQ(enumerate_edge_deletions(5, 2).size(), 2u);
  const size_t trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), trees[n - 1]) << n;
}
