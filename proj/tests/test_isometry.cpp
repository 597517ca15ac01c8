#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "graphforms/enumerate.hpp"
#include "graphforms/isometry.hpp"
#include "graphforms/qform.hpp"

using namespace graphforms;

namespace {

IntMatrix random_unimodular(int n, std::mt19937_64& rng, int steps = 25) {
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    int k = static_cast<int>(rng() % 3) - 1;
    for (int r = 0; r < n; ++r) u(r, j) += k * u(r, i);
  }
  return u;
}

IntMatrix square_shift(const Graph& g, int m) {
  IntMatrix b = adjacency_matrix(g) + IntMatrix::identity(g.order()).scaled(m);
  return b * b;
}

void expect_witness(const IntMatrix& f1, const IntMatrix& f2, const IsometryResult& r) {
  ASSERT_EQ(r.verdict, IsometryVerdict::kIsometric);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->transpose() * f1 * *r.witness, f2);
  EXPECT_EQ(abs(exact_det(*r.witness)), 1);
}

// Brute-force oracle: columns of U drawn from the box [-b, b]^d, Gram entries checked as they are fixed.
bool box_isometric(const IntMatrix& f1, const IntMatrix& f2, int b) {
  const int d = f1.rows();
  std::vector<IntVector> box;
  IntVector v(d, 0);
  std::function<void(int)> fill = [&](int i) {
    if (i == d) {
      box.push_back(v);
      return;
    }
    for (int x = -b; x <= b; ++x) {
      v[i] = x;
      fill(i + 1);
    }
  };
  fill(0);
  auto bil = [&](const IntVector& x, const IntVector& y) {
    mpz_class s = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) s += x[i] * f1(i, j) * y[j];
    return s;
  };
  std::vector<IntVector> cols;
  std::function<bool(int)> go = [&](int k) {
    if (k == d) {
      IntMatrix u(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) u(i, j) = cols[j][i];
      return abs(exact_det(u)) == 1;
    }
    for (const auto& x : box) {
      if (bil(x, x) != f2(k, k)) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = bil(cols[j], x) == f2(j, k);
      if (!ok) continue;
      cols.push_back(x);
      if (go(k + 1)) return true;
      cols.pop_back();
    }
    return false;
  };
  return go(0);
}

}  // namespace

TEST(Lll, TwoByTwo) {
  IntMatrix f = IntMatrix::from_rows({{5, 4}, {4, 5}});
  auto r = lll_reduce(f);
  EXPECT_EQ(exact_det(r.gram), 9);
  EXPECT_EQ(r.transform.transpose() * f * r.transform, r.gram);
  // Lovasz with delta 99/100 and size reduction for the reduced 2x2 form.
  mpq_class g00 = r.gram(0, 0), g01 = r.gram(0, 1), g11 = r.gram(1, 1);
  mpq_class mu = g01 / g00;
  EXPECT_LE(abs(mu), mpq_class(1, 2));
  EXPECT_GE(g11 - mu * mu * g00, (mpq_class(99, 100) - mu * mu) * g00);
  EXPECT_EQ(r.gram(0, 0), 2);
}

TEST(Lll, RejectsIndefinite) {
  EXPECT_FALSE(is_positive_definite(IntMatrix::from_rows({{1, 2}, {2, 1}})));
  EXPECT_THROW(lll_reduce(IntMatrix::from_rows({{1, 2}, {2, 1}})), Error);
  EXPECT_TRUE(is_positive_definite(IntMatrix::from_rows({{2, -1}, {-1, 2}})));
}

TEST(ShortVectors, KnownCounts) {
  EXPECT_EQ(short_vectors(IntMatrix::from_rows({{2, 1}, {1, 2}}), 2).size(), 6u);
  EXPECT_EQ(short_vectors(IntMatrix::identity(2), 1).size(), 4u);
  EXPECT_EQ(short_vectors(IntMatrix::identity(3), 2).size(), 18u);
  EXPECT_THROW(short_vectors(IntMatrix::identity(4), 4, 10), BudgetExceeded);
}

TEST(ShortVectors, MatchBoxOracle) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + t % 4;
    IntMatrix u = random_unimodular(n, rng, 6);
    IntMatrix f = u.transpose() * IntMatrix::identity(n).scaled(1 + t % 3) * u;
    for (int i = 0; i < n; ++i) f(i, i) += 1;
    mpz_class bound = 6;
    std::map<IntVector, int> got;
    for (const auto& v : short_vectors(f, bound)) {
      EXPECT_LE(quadratic_value(f, v), bound);
      ++got[v];
    }
    // Every vector of norm <= 6 has coordinates bounded by 6 since F - I is positive semidefinite.
    std::map<IntVector, int> want;
    IntVector v(n, 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == n) {
        bool zero = true;
        for (auto& x : v) zero = zero && x == 0;
        if (!zero && quadratic_value(f, v) <= bound) ++want[v];
        return;
      }
      for (int x = -6; x <= 6; ++x) {
        v[i] = x;
        fill(i + 1);
      }
    };
    fill(0);
    EXPECT_EQ(got, want);
  }
}

TEST(Isometry, RandomUnimodularConjugates) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 9;
    IntMatrix f = laplacian_matrix(complete_graph(n)) + IntMatrix::identity(n);
    if (t % 2) f = adjacency_matrix(cycle_graph(n + 1)) + IntMatrix::identity(n + 1).scaled(3);
    if (!is_positive_definite(f)) continue;
    IntMatrix u = random_unimodular(f.rows(), rng);
    IntMatrix g = u.transpose() * f * u;
    expect_witness(f, g, is_isometric(f, g));
  }
}

TEST(Isometry, SeparatedByDeterminantAndGenus) {
  auto r = is_isometric(IntMatrix::identity(2), IntMatrix::from_rows({{2, 1}, {1, 2}}));
  EXPECT_EQ(r.verdict, IsometryVerdict::kNotIsometric);
  EXPECT_EQ(r.separating_invariant, "determinant");
  // Same determinant 8, different genus: 2 + 4 diagonal vs 1 + 8 diagonal.
  auto s = is_isometric(IntMatrix::from_rows({{2, 0}, {0, 4}}), IntMatrix::from_rows({{1, 0}, {0, 8}}));
  EXPECT_EQ(s.verdict, IsometryVerdict::kNotIsometric);
  EXPECT_EQ(s.separating_invariant.rfind("genus", 0), 0u);
}

TEST(Isometry, Srg16SquareShifts) {
  Graph a = rook4x4_graph(), b = shrikhande_graph();
  for (auto [m, iso] : std::vector<std::pair<int, bool>>{{2, false}, {-2, true}, {-6, false}}) {
    IntMatrix f1 = square_shift(a, m), f2 = square_shift(b, m);
    // Every shift hits an eigenvalue of A, so the forms are compared through their quotients.
    ASSERT_EQ(exact_det(f1), 0);
    auto r = semidefinite_equivalent(f1, f2);
    EXPECT_NE(r.verdict, IsometryVerdict::kExhausted) << m;
    if (iso)
      EXPECT_EQ(r.verdict, IsometryVerdict::kIsometric);
    else
      EXPECT_EQ(r.verdict, IsometryVerdict::kNotIsometric) << m;
  }
}

TEST(Isometry, IsomorphicGraphsGiveSignedPermutationWitnesses) {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 10; ++t) {
    Graph g = dumbbell_graph(3 + t % 3);
    std::vector<int> p(g.order());
    for (int i = 0; i < g.order(); ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    Graph h = g.relabeled(p);
    IntMatrix f1 = laplacian_matrix(g) + IntMatrix::identity(g.order());
    IntMatrix f2 = laplacian_matrix(h) + IntMatrix::identity(h.order());
    // The permutation matrix itself is an orthogonal integral isometry.
    IntMatrix perm(g.order(), g.order());
    for (int v = 0; v < g.order(); ++v) perm(v, p[v]) = 1;
    EXPECT_EQ(perm.transpose() * f1 * perm, f2);
    auto r = is_isometric(f1, f2);
    expect_witness(f1, f2, r);
  }
}

TEST(LaplacianForms, TreesAreEquivalentAndP3C3AreNot) {
  for (int n = 2; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    for (size_t i = 1; i < trees.size(); ++i) {
      auto r = laplacian_form_equivalent(trees[0], trees[i]);
      EXPECT_EQ(r.verdict, IsometryVerdict::kIsometric) << n << " " << i;
    }
  }
  EXPECT_EQ(laplacian_form_equivalent(path_graph(3), cycle_graph(3)).verdict, IsometryVerdict::kNotIsometric);
}

TEST(LaplacianForms, AgreeWithBoxOracleOnSmallGraphs) {
  // Connected graphs on 4 vertices have 3-dimensional quotients.
  std::vector<Graph> gs;
  for (int m = 0; m <= 3; ++m)
    for (const auto& g : enumerate_edge_deletions(4, m))
      if (g.connected()) gs.push_back(g);
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i; j < gs.size(); ++j) {
      auto q1 = saturation_quotient(laplacian_matrix(gs[i])).gram;
      auto q2 = saturation_quotient(laplacian_matrix(gs[j])).gram;
      auto r = is_isometric(q1, q2);
      ASSERT_NE(r.verdict, IsometryVerdict::kExhausted);
      bool oracle = box_isometric(q1, q2, 2);
      if (oracle) EXPECT_EQ(r.verdict, IsometryVerdict::kIsometric) << i << " " << j;
      if (r.verdict == IsometryVerdict::kIsometric) expect_witness(q1, q2, r);
      if (r.verdict == IsometryVerdict::kNotIsometric) EXPECT_FALSE(oracle);
    }
}

TEST(LaplacianForms, SemidefiniteNeedsEqualCorank) {
  Graph a = disjoint_union(path_graph(2), path_graph(2));
  Graph b = path_graph(4);
  EXPECT_EQ(laplacian_form_equivalent(a, b).verdict, IsometryVerdict::kNotIsometric);
}

TEST(Wedge, ClassIndependentOfWedgePoints) {
  Graph a = cycle_graph(4).with_edge(0, 2), b = path_graph(3);
  Graph base = wedge_sum(a, 0, b, 0);
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      EXPECT_EQ(laplacian_form_equivalent(base, wedge_sum(a, x, b, y)).verdict, IsometryVerdict::kIsometric);
}

TEST(Budget, ExhaustedIsReported) {
  IsometryBudget tiny;
  tiny.max_nodes = 1;
  Graph a = rook4x4_graph(), b = shrikhande_graph();
  IntMatrix f1 = square_shift(a, 1), f2 = square_shift(b, 1);
  auto r = is_isometric(f1, f2, tiny);
  if (r.verdict == IsometryVerdict::kExhausted)
    EXPECT_EQ(r.budget_hit, "nodes");
  else if (r.verdict == IsometryVerdict::kIsometric)
    expect_witness(f1, f2, r);
}
