#include <gtest/gtest.h>

#include <random>

#include "graphforms/factor.hpp"
#include "graphforms/graph_io.hpp"
#include "graphforms/qform.hpp"

using namespace graphforms;

namespace {

IntMatrix random_unimodular(int n, std::mt19937_64& rng, int steps = 20) {
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) {
      for (int r = 0; r < n; ++r) u(r, i) = -u(r, i);
      continue;
    }
    int k = static_cast<int>(rng() % 5) - 2;
    for (int r = 0; r < n; ++r) u(r, j) += k * u(r, i);
  }
  return u;
}

IntMatrix shift(const IntMatrix& a, int k) { return a + IntMatrix::identity(a.rows()).scaled(k); }

}  // namespace

TEST(PadicSymbol, Srg16AdjacencyRows) {
  IntMatrix rook = adjacency_matrix(rook4x4_graph());
  IntMatrix shr = adjacency_matrix(parse_graph6("OKV|M@`QOpEDGdcT`RSFP"));
  EXPECT_EQ(padic_symbol(rook, 2).to_list_string(), "[0, 6, 7, 0, 0], [1, 4, 1, 0, 0], [2, 6, 3, 1, 4]");
  EXPECT_EQ(padic_symbol(shr, 2).to_list_string(), "[0, 6, 3, 0, 0], [1, 4, 3, 1, 2], [2, 6, 5, 1, 6]");
  EXPECT_EQ(padic_symbol(rook, 3).to_list_string(), "[0, 15, 1], [1, 1, -1]");
  EXPECT_EQ(padic_symbol(shr, 3).to_list_string(), "[0, 15, 1], [1, 1, -1]");
  // The scale-2 constituents differ in type, so A separates the pair 2-adically.
  EXPECT_FALSE(padic_symbol(rook, 2).equivalent(padic_symbol(shr, 2)));
}

TEST(PadicSymbol, Srg16ShiftedCompactRows) {
  IntMatrix f = shift(adjacency_matrix(rook4x4_graph()), 1);
  EXPECT_EQ(padic_symbol(f, 3).to_compact_string(), "1^{10-} 3^{6+}");
  EXPECT_EQ(padic_symbol(f, 7).to_compact_string(), "1^{15-} 7^{1+}");
}

TEST(PadicSymbol, CfiPairSeparatedAtTwoOnly) {
  auto cfi = cfi_pair(complete_graph(4));
  IntMatrix a = adjacency_matrix(cfi.untwisted), b = adjacency_matrix(cfi.twisted);
  EXPECT_EQ(padic_symbol(a, 2).to_list_string(), "[0, 30, 7, 0, 0], [1, 4, 1, 0, 0], [2, 6, 3, 1, 4]");
  EXPECT_EQ(padic_symbol(b, 2).to_list_string(), "[0, 30, 7, 0, 0], [1, 4, 1, 1, 0], [2, 6, 3, 1, 4]");
  EXPECT_FALSE(padic_symbol(a, 2).equivalent(padic_symbol(b, 2)));
  EXPECT_EQ(padic_symbol(a, 3).to_list_string(), padic_symbol(b, 3).to_list_string());
  auto le = local_equivalence(a, b);
  EXPECT_FALSE(le.equivalent);
  EXPECT_EQ(le.witness_prime, 2);
}

TEST(PadicSymbol, CongruenceInvariance) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> d(-3, 3);
  int tested = 0;
  while (tested < 40) {
    int n = 2 + tested % 5;
    IntMatrix f(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) f(i, j) = f(j, i) = d(rng) * (i == j ? 2 : 1) + (i == j);
    if (exact_det(f) == 0) continue;
    ++tested;
    IntMatrix u = random_unimodular(n, rng);
    IntMatrix g = u.transpose() * f * u;
    ASSERT_EQ(exact_det(g), exact_det(f));
    for (const auto& s : genus_symbol_list(f)) EXPECT_TRUE(s.equivalent(padic_symbol(g, s.p))) << f.to_string();
    EXPECT_TRUE(is_locally_equivalent(f, g));
  }
}

TEST(PadicSymbol, SmallCanonicalExamples) {
  // <1> + <1> and <3> + <3> share all odd-prime data away from 3 but not at 2.
  IntMatrix a = IntMatrix::from_rows({{1, 0}, {0, 1}});
  IntMatrix b = IntMatrix::from_rows({{3, 0}, {0, 3}});
  EXPECT_FALSE(is_locally_equivalent(a, b));
  // The hyperbolic plane is even; <1> + <-1> is odd.
  IntMatrix h = IntMatrix::from_rows({{0, 1}, {1, 0}});
  IntMatrix o = IntMatrix::from_rows({{1, 0}, {0, -1}});
  EXPECT_EQ(padic_symbol(h, 2).canonical().constituents[0].type, 0);
  EXPECT_EQ(padic_symbol(o, 2).canonical().constituents[0].type, 1);
  EXPECT_FALSE(is_locally_equivalent(h, o));
  EXPECT_THROW(padic_symbol(IntMatrix::from_rows({{1, 1}, {1, 1}}), 2), Error);
}

TEST(JordanDecomposition, ScalesMultiplyToDeterminantValuation) {
  IntMatrix f = adjacency_matrix(rook4x4_graph());
  for (int p : {2, 3}) {
    auto blocks = jordan_decomposition(f, p);
    int v = 0, rank = 0;
    for (const auto& b : blocks) {
      v += b.exponent * b.unit.rows();
      rank += b.unit.rows();
      EXPECT_NE(exact_det(b.unit) % p, 0);
    }
    EXPECT_EQ(rank, 16);
    EXPECT_EQ(v, valuation(exact_det(f), p));
  }
}

TEST(SaturationQuotient, LaplacianQuotientDeterminantCountsTrees) {
  std::mt19937_64 rng(52);
  std::bernoulli_distribution coin(0.5);
  int tested = 0;
  while (tested < 40) {
    int n = 2 + tested % 8;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) e.push_back({i, j});
    Graph g(n, e);
    if (!g.connected()) continue;
    ++tested;
    IntMatrix l = laplacian_matrix(g);
    auto q = saturation_quotient(l);
    EXPECT_EQ(q.corank, 1);
    EXPECT_TRUE((l * q.kernel).is_zero());
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(i);
    EXPECT_EQ(abs(exact_det(q.gram)), exact_det(l.submatrix(rest, rest)));
    // [complement | kernel] is a basis of Z^n.
    IntMatrix basis(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n - 1; ++j) basis(i, j) = q.complement(i, j);
      basis(i, n - 1) = q.kernel(i, 0);
    }
    EXPECT_EQ(abs(exact_det(basis)), 1);
  }
}

TEST(SaturationQuotient, CorankIsComponentCount) {
  Graph g = disjoint_union(disjoint_union(cycle_graph(4), path_graph(3)), complete_graph(1));
  auto q = saturation_quotient(laplacian_matrix(g));
  EXPECT_EQ(q.corank, 3);
  EXPECT_EQ(q.gram.rows(), 5);
  EXPECT_NE(exact_det(q.gram), 0);
}
