// Acceptance run: one PASS/FAIL line per criterion, details for failing cells.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "graphforms/embedding.hpp"
#include "graphforms/enumerate.hpp"
#include "graphforms/experiments.hpp"
#include "graphforms/graph_io.hpp"
#include "graphforms/qform.hpp"

using namespace graphforms;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

ExperimentReport run(const std::string& tag, std::vector<int> sizes = {}) {
  ExperimentSpec s;
  s.tag = tag;
  s.sizes = std::move(sizes);
  s.threads = 0;
  return run_experiment(s);
}

// Adds every non-passing gated cell to the outcome.
void check_report(Outcome& o, const ExperimentReport& r) {
  for (const auto& c : r.cells) {
    if (c.status == CellStatus::kFail || c.status == CellStatus::kExhausted)
      o.check(false, r.tag + " | " + c.anchor + " | " + c.row + " | " + c.column + ": got " + c.value.dump() +
                         ", expected " + c.expected.dump() + " (" + c.tolerance + ", " + to_string(c.status) + ")");
  }
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph(n, e);
}

IntMatrix square_shift(const Graph& g, int m) {
  IntMatrix b = adjacency_matrix(g) + IntMatrix::identity(g.order()).scaled(m);
  return b * b;
}

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  check_report(o, run("complete-cycle", {5, 10, 20, 50, 100}));
  double s = seconds_since(t0);
  o.check(s < 60, "runtime " + std::to_string(s) + " s exceeds 60 s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  check_report(o, run("dumbbell"));
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto t0 = Clock::now();
  auto r = run("nearly-complete");
  check_report(o, r);
  bool flagged = false;
  for (const auto& c : r.cells)
    if (c.row == "n=7" && c.column == "m=6 cospectral minimizer") flagged = c.value == true;
  o.check(flagged, "(7,6) minimizing pair not flagged cospectral");
  double s = seconds_since(t0);
  o.check(s < 600, "runtime " + std::to_string(s) + " s exceeds 600 s");
  return o;
}

Outcome criterion4() {
  Outcome o;
  Graph a = rook4x4_graph(), b = load_graph("OKV|M@`QOpEDGdcT`RSFP");
  const auto& want = expected_values().at("srg16").at("square_shift_classes");
  for (int m : {2, -2, -6}) {
    auto r = semidefinite_equivalent(square_shift(a, m), square_shift(b, m));
    o.check(r.verdict != IsometryVerdict::kExhausted, "m=" + std::to_string(m) + " exhausted");
    int classes = r.verdict == IsometryVerdict::kIsometric ? 1 : 2;
    int expected = want.at(std::to_string(m)).get<int>();
    o.check(r.verdict != IsometryVerdict::kExhausted && classes == expected,
            "(A" + std::to_string(m) + "I)^2: " + std::to_string(classes) + " classes, expected " + std::to_string(expected));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& fx = expected_values();
  auto eq = [&](const std::string& got, const std::string& want, const std::string& what) {
    o.check(got == want, what + ": got \"" + got + "\", expected \"" + want + "\"");
  };
  Graph rook = rook4x4_graph(), shr = load_graph("OKV|M@`QOpEDGdcT`RSFP");
  for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"rook4x4", rook}, {"shrikhande", shr}})
    for (int p : {2, 3})
      eq(padic_symbol(adjacency_matrix(g), p).to_list_string(),
         fx.at("srg16").at("adjacency_symbols").at(name).at(std::to_string(p)).get<std::string>(),
         name + " A p=" + std::to_string(p));
  IntMatrix shifted = adjacency_matrix(rook) + IntMatrix::identity(16);
  for (int p : {3, 7})
    eq(padic_symbol(shifted, p).to_compact_string(), fx.at("srg16").at("shifted_symbols").at(std::to_string(p)).get<std::string>(),
       "rook4x4 A+I p=" + std::to_string(p));
  auto cfi = cfi_pair(complete_graph(4));
  IntMatrix ca = adjacency_matrix(cfi.untwisted), cb = adjacency_matrix(cfi.twisted);
  const auto& rows = fx.at("cfi").at("symbols");
  for (int p : {2, 3}) {
    eq(padic_symbol(ca, p).to_list_string(), rows[0].at(std::to_string(p)).get<std::string>(), "CFI untwisted p=" + std::to_string(p));
    eq(padic_symbol(cb, p).to_list_string(), rows[1].at(std::to_string(p)).get<std::string>(), "CFI twisted p=" + std::to_string(p));
  }
  o.check(!padic_symbol(ca, 2).equivalent(padic_symbol(cb, 2)), "CFI pair not separated at p=2");
  o.check(padic_symbol(ca, 3).equivalent(padic_symbol(cb, 3)), "CFI pair differs at p=3");
  auto le = local_equivalence(ca, cb);
  o.check(!le.equivalent && le.witness_prime == 2, "CFI genus comparison does not name p=2");
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto r = run("srg28");
  check_report(o, r);
  bool partition = false, singleton = false;
  for (const auto& c : r.cells) {
    partition |= c.column.find("(A+2I)^2") != std::string::npos && c.status == CellStatus::kPass;
    singleton |= c.column.find("alone in its class") != std::string::npos && c.status == CellStatus::kPass;
  }
  o.check(partition, "no passing (A+2I)^2 partition cell");
  o.check(singleton, "T(8) singleton not confirmed");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const double tol = expected_values().at("tolerances").at("st_absolute").get<double>();
  auto cfi = cfi_pair(complete_graph(4));
  o.check(st_equal(st_invariant(cfi.untwisted), st_invariant(cfi.twisted), tol), "CFI(K4) ST invariants differ");
  o.check(st_equal(st_invariant(rook4x4_graph()), st_invariant(shrikhande_graph()), tol), "srg(16) ST invariants differ");
  std::mt19937_64 rng(2024);
  int pairs = 0, equal = 0;
  while (pairs < 100) {
    int n = 6 + static_cast<int>(rng() % 7);
    Graph a = random_graph(n, 0.5, rng), b = random_graph(n, 0.5, rng);
    if (characteristic_polynomial(laplacian_matrix(a)) == characteristic_polynomial(laplacian_matrix(b))) continue;
    ++pairs;
    equal += st_equal(st_invariant(a), st_invariant(b), tol);
  }
  o.check(equal == 0, std::to_string(equal) + " of 100 non-cospectral pairs have equal ST");
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  // Green residual and rank-one deletion.
  double residual = 0, update = 0;
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(n, 0.5, rng);
    if (g.size() == 0) g = g.with_edge(0, 1);
    const double u = 0.5 + static_cast<double>(rng() % 50) / 10.0;
    Eigen::MatrixXd gr = green(g, u);
    Eigen::MatrixXd m = laplacian_real(g) + u * Eigen::MatrixXd::Identity(n, n);
    residual = std::max(residual, (m * gr - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
    auto [x, y] = g.edges()[rng() % g.size()];
    update = std::max(update, (green_after_edge_deletion(gr, x, y) - green(g.without_edge(x, y), u)).cwiseAbs().maxCoeff());
  }
  o.check(residual < 1e-10, "Green residual " + std::to_string(residual));
  o.check(update < 1e-8, "rank-one update error " + std::to_string(update));
  // Cofactor positivity.
  int cofactors = 0;
  while (cofactors < 40) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_graph(n, 0.4, rng);
    if (!g.connected()) continue;
    ++cofactors;
    IntMatrix l = laplacian_matrix(g);
    for (int x = 0; x < n; ++x) {
      int y = static_cast<int>(rng() % n);
      for (const auto& c : cofactor_polynomial(l, x, y).coeffs) o.check(c > 0, "nonpositive cofactor coefficient");
    }
  }
  // Trees, P3 vs C3, and the wedge monoid.
  check_report(o, run("tree-forms"));
  o.check(laplacian_form_equivalent(path_graph(3), cycle_graph(3)).verdict == IsometryVerdict::kNotIsometric,
          "P3 and C3 forms not separated");
  check_report(o, run("wedge-monoid"));
  // Simple-component recomposition: blocks reassemble the edge set, n <= 9.
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(2 + t % 8, 0.35, rng);
    if (!g.connected()) continue;
    std::vector<Edge> all;
    for (const auto& b : block_decomposition(g))
      for (auto [u, v] : b.graph.edges()) all.push_back({std::min(b.vertices[u], b.vertices[v]), std::max(b.vertices[u], b.vertices[v])});
    std::sort(all.begin(), all.end());
    o.check(all == g.edges(), "block recomposition failed for " + to_graph6(g));
  }
  // Euler identity on random rotations and on the reconstructed embedding pairs.
  for (const Graph& g : {complete_graph(5), complete_graph(6), rook4x4_graph(), dumbbell_graph(4)})
    for (int t = 0; t < 20; ++t) {
      std::vector<std::vector<int>> order(g.order());
      for (int v = 0; v < g.order(); ++v) {
        order[v] = g.neighbors(v);
        std::shuffle(order[v].begin(), order[v].end(), rng);
      }
      auto rep = trace_faces(RotationSystem::from_neighbor_order(g, order));
      o.check(g.order() - g.size() + static_cast<int>(rep.faces.size()) == 2 - 2 * rep.genus, "Euler identity");
    }
  check_report(o, run("dual-conjecture"));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "complete/cycle distance table", criterion1},
      {2, "dumbbell distances and eigenfunction gaps", criterion2},
      {3, "nearly-complete minima and cospectral flag", criterion3},
      {4, "srg(16) square-shift isometry classes {2, 1, 2}", criterion4},
      {5, "p-adic symbols byte-exact", criterion5},
      {6, "srg(28) 3+1 split with T(8) singleton", criterion6},
      {7, "ST invariant equalities and separations", criterion7},
      {8, "property suites", criterion8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds_since(t0));
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  // Criterion 9 is declared out of scope; the n <= 8 prime-factor run is reported without gating.
  auto cfi = run("cfi-prime-factors");
  std::printf("INFO criterion 9: declared not reproducible at desk scale; cfi-prime-factors n<=8 exit code %d\n",
              cfi.exit_code());
  return all ? 0 : 1;
}
