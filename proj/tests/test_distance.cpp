#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "graphforms/distance.hpp"

using namespace graphforms;

namespace {

// Independent oracle for connected graphs: (L + uI + J/n)^-1 - J/(n(u+1)) is the
// resolvent restricted to the nonzero modes, and the entries are sorted per sample.
double oracle_distance(const Graph& g1, const Graph& g2, double c) {
  const int n = g1.order();
  auto res = [n](const Graph& g, double u) {
    Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    Eigen::MatrixXd m = laplacian_real(g) + u * Eigen::MatrixXd::Identity(n, n) + j;
    return Eigen::MatrixXd(m.inverse() - j / (u + 1.0));
  };
  auto l1 = [](const Graph& g) { return SpectralDecomposition::of_laplacian(g).eigenvalues()[1]; };
  const double lambda = std::min(l1(g1), l1(g2));
  double total = 0;
  for (int s = 1; s <= n; ++s) {
    const double u = c * s * lambda / n;
    Eigen::MatrixXd a = res(g1, u), b = res(g2, u);
    std::vector<double> va(a.data(), a.data() + a.size()), vb(b.data(), b.data() + b.size());
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    for (size_t i = 0; i < va.size(); ++i) total += (va[i] - vb[i]) * (va[i] - vb[i]);
  }
  return static_cast<double>(n) * n * std::sqrt(total / n);
}

}  // namespace

TEST(Distance, MatchesIndependentOracle) {
  struct Case {
    Graph a, b;
  };
  std::vector<Case> cases;
  for (int n : {5, 8, 13}) {
    cases.push_back({complete_graph(n), complete_graph(n).without_edge(0, 1)});
    cases.push_back({cycle_graph(n), path_graph(n)});
  }
  cases.push_back({dumbbell_graph(5), dumbbell_graph(5).without_edge(0, 5)});
  for (const auto& cs : cases) {
    double got = distance(cs.a, cs.b).value;
    double want = oracle_distance(cs.a, cs.b, 1e-4);
    EXPECT_NEAR(got, want, 1e-6 * want) << cs.a.order();
  }
}

TEST(Distance, TableSpotValues) {
  EXPECT_NEAR(distance(complete_graph(5), complete_graph(5).without_edge(0, 1)).value, 3.3330, 3.3330 * 5e-4);
  EXPECT_NEAR(distance(cycle_graph(5), path_graph(5)).value, 46.894, 46.894 * 5e-4);
}

TEST(Distance, SymmetricZeroOnSelfAndRelabelInvariant) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 15; ++t) {
    int n = 4 + t % 6;
    Graph a = complete_graph(n), b = cycle_graph(n);
    for (int r = 0; r < 2 * n; ++r) {
      auto [x, y] = a.edges()[rng() % a.size()];
      if (a.size() > n) a = a.without_edge(x, y);
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    double d = distance(a, b).value;
    EXPECT_NEAR(distance(b, a).value, d, 1e-9 * std::max(1.0, d));
    EXPECT_NEAR(distance(a.relabeled(p), b).value, d, 1e-7 * std::max(1.0, d));
    EXPECT_NEAR(distance(a, a.relabeled(p)).value, 0.0, 1e-6);
  }
}

TEST(Distance, TildeGreenKillsZeroModes) {
  Graph g = disjoint_union(cycle_graph(4), complete_graph(3));
  Eigen::MatrixXd t = tilde_green(g, 0.1);
  Eigen::VectorXd ind = Eigen::VectorXd::Zero(7);
  ind.head(4).setOnes();
  EXPECT_LT((t * ind).norm(), 1e-12);
  Eigen::MatrixXd m = laplacian_real(g) + 0.1 * Eigen::MatrixXd::Identity(7, 7);
  Eigen::MatrixXd p0 = Eigen::MatrixXd::Zero(7, 7);
  p0.topLeftCorner(4, 4).setConstant(0.25);
  p0.bottomRightCorner(3, 3).setConstant(1.0 / 3);
  EXPECT_LT((m * t - (Eigen::MatrixXd::Identity(7, 7) - p0)).norm(), 1e-10);
}

TEST(Distance, FlagsAndPadding) {
  auto rep = distance(rook4x4_graph(), shrikhande_graph());
  EXPECT_TRUE(rep.cospectral);
  Graph small = path_graph(3);
  Graph padded = pad_isolated(small, 5);
  EXPECT_EQ(padded.order(), 5);
  EXPECT_TRUE(distance(padded, cycle_graph(5)).disconnected_input);
  EXPECT_THROW(distance(small, cycle_graph(5)), Error);
  EXPECT_THROW(pad_isolated(cycle_graph(5), 3), Error);
}
