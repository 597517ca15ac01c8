#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "graphforms/embedding.hpp"
#include "graphforms/enumerate.hpp"
#include "graphforms/experiments.hpp"
#include "graphforms/factor.hpp"
#include "graphforms/graph_io.hpp"
#include "graphforms/qform.hpp"
#include "graphforms/spectral.hpp"

namespace graphforms {

namespace {

using Task = std::function<std::vector<Cell>()>;
using nlohmann::json;

const std::vector<int>& default_sizes(const std::string& tag) {
  static const std::map<std::string, std::vector<int>> d{
      {"dumbbell", {5, 10, 20, 50, 100}},
      {"complete-cycle", {5, 10, 20, 50, 100}},
      {"nearly-complete", {4, 5, 6, 7}},
      {"srg16", {}},
      {"srg28", {}},
      {"cfi-symbols", {4, 6, 8}},
      {"cfi-prime-factors", {4, 6, 8}},
      {"tree-forms", {1, 2, 3, 4, 5, 6, 7, 8}},
      {"wedge-monoid", {20}},
      {"dual-conjecture", {}},
  };
  return d.at(tag);
}

double tol(const std::string& key) { return expected_values().at("tolerances").at(key).get<double>(); }

Cell info_cell(std::string anchor, std::string row, std::string column, json value, std::string note = {}) {
  Cell c;
  c.anchor = std::move(anchor);
  c.row = std::move(row);
  c.column = std::move(column);
  c.value = std::move(value);
  c.note = std::move(note);
  return c;
}

Cell exact_cell(std::string anchor, std::string row, std::string column, json value, json expected) {
  Cell c = info_cell(std::move(anchor), std::move(row), std::move(column), std::move(value));
  c.expected = std::move(expected);
  c.tolerance = "exact";
  c.status = c.value == c.expected ? CellStatus::kPass : CellStatus::kFail;
  return c;
}

DistanceOptions with_c(DistanceOptions o, const json& section) {
  o.c = section.at("c").get<double>();
  return o;
}

// ---- quadratic-form class counting ----

struct Classes {
  std::vector<int> class_of;
  bool exhausted = false;
  long long nodes = 0;

  int count() const { return class_of.empty() ? 0 : *std::max_element(class_of.begin(), class_of.end()) + 1; }
  std::vector<int> partition() const {
    std::vector<int> sizes(count(), 0);
    for (int c : class_of) ++sizes[c];
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
  }
};

Classes isometry_classes(const std::vector<IntMatrix>& forms, const IsometryBudget& budget) {
  Classes out;
  std::vector<int> reps;
  for (size_t i = 0; i < forms.size(); ++i) {
    int found = -1;
    for (size_t r = 0; r < reps.size() && found < 0; ++r) {
      auto res = semidefinite_equivalent(forms[reps[r]], forms[i], budget);
      out.nodes += res.nodes;
      if (res.verdict == IsometryVerdict::kExhausted) out.exhausted = true;
      if (res.verdict == IsometryVerdict::kIsometric) found = static_cast<int>(r);
    }
    if (found < 0) {
      found = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
    }
    out.class_of.push_back(found);
  }
  return out;
}

IntMatrix shifted_square(const Graph& g, int m) {
  IntMatrix b = adjacency_matrix(g) + IntMatrix::identity(g.order()).scaled(m);
  return b * b;
}

std::optional<std::array<int, 4>> srg_parameters(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  int lambda = -1, mu = -1;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int common = 0;
      for (int w : g.neighbors(u)) common += g.has_edge(w, v);
      int& slot = g.has_edge(u, v) ? lambda : mu;
      if (slot < 0) slot = common;
      if (slot != common) return std::nullopt;
    }
  }
  return std::array<int, 4>{n, k, std::max(lambda, 0), std::max(mu, 0)};
}

// Named family graphs plus non-isomorphic corpus graphs with the same parameters.
std::vector<std::pair<std::string, Graph>> srg_family(const json& section, const std::string& corpus) {
  std::vector<std::pair<std::string, Graph>> out;
  for (auto it = section.at("graphs").begin(); it != section.at("graphs").end(); ++it)
    out.emplace_back(it.key(), load_graph(it.value().get<std::string>()));
  auto params = srg_parameters(out.front().second);
  if (!params) throw Error("family graph " + out.front().first + " is not strongly regular");
  for (const auto& [name, g] : out)
    if (srg_parameters(g) != params) throw Error("family graph " + name + " has the wrong parameters");
  if (corpus.empty()) return out;
  if (!std::filesystem::is_directory(corpus)) throw Error("corpus directory not found: " + corpus);
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(corpus))
    if (e.path().extension() == ".g6") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto graphs = read_graph6_file(f.string());
    for (size_t i = 0; i < graphs.size(); ++i) {
      if (srg_parameters(graphs[i]) != params) continue;
      bool known = false;
      for (const auto& [name, g] : out) known = known || find_isomorphism(g, graphs[i]).has_value();
      if (!known) out.emplace_back(f.filename().string() + "#" + std::to_string(i), graphs[i]);
    }
  }
  return out;
}

std::string joined(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string symbol_at(const IntMatrix& f, int p) { return padic_symbol(f, p).to_list_string(); }

Cell st_pair_cell(const std::string& anchor, const std::string& row, const Graph& a, const Graph& b) {
  const double t = tol("st_absolute");
  bool eq = st_equal(st_invariant(a), st_invariant(b), t);
  Cell c = exact_cell(anchor, row, "ST equal", eq, true);
  c.tolerance = "abs " + std::to_string(t).substr(0, 8);
  return c;
}

// ---- distance tables ----

std::vector<Task> complete_cycle_tasks(const ExperimentSpec& spec, const std::vector<int>& sizes) {
  const json& fx = expected_values().at("complete_cycle");
  const auto opts = with_c(spec.distance, fx);
  const double rel = tol("distance_relative");
  std::vector<Task> tasks;
  for (int n : sizes) {
    tasks.push_back([=, &fx] {
      const std::string key = std::to_string(n);
      const std::string anchor = fx.at("anchor").get<std::string>() + ", n=" + key;
      std::vector<Cell> cells;
      Graph k = complete_graph(n);
      double dk = distance(k, k.without_edge(0, 1), opts).value;
      Graph c = cycle_graph(n);
      double dc = distance(c, path_graph(n), opts).value;
      auto add = [&](const char* col, const char* fxkey, double v) {
        if (fx.at(fxkey).contains(key))
          cells.push_back(relative_cell(anchor, "n=" + key, col, v, fx.at(fxkey).at(key).get<double>(), rel));
        else
          cells.push_back(info_cell(anchor, "n=" + key, col, v));
      };
      add("D(K_n, K_n-e)", "complete_minus_edge", dk);
      add("D(C_n, P_n)", "cycle_path", dc);
      return cells;
    });
  }
  return tasks;
}

}  // namespace

double dumbbell_gap(int n, int which) {
  Graph g = dumbbell_graph(n);
  auto sd = SpectralDecomposition::of_laplacian(g);
  if (sd.distinct_count() < 2 || sd.multiplicities()[1] != 1) throw Error("dumbbell Fiedler value is not simple");
  Eigen::VectorXd phi = sd.eigenspace(1).col(0);
  auto [a, b] = dumbbell_edge(n, static_cast<DumbbellEdge>(which));
  return std::abs(phi(a) - phi(b));
}

namespace {

std::vector<Task> dumbbell_tasks(const ExperimentSpec& spec, const std::vector<int>& sizes) {
  const json& fx = expected_values().at("dumbbell");
  const auto opts = with_c(spec.distance, fx);
  std::vector<Task> tasks;
  for (int n : sizes) {
    tasks.push_back([=, &fx] {
      const std::string key = std::to_string(n);
      const bool known = fx.at("distance").contains(key);
      std::vector<Cell> cells;
      Graph g = dumbbell_graph(n);
      for (int i = 1; i <= 4; ++i) {
        auto [a, b] = dumbbell_edge(n, static_cast<DumbbellEdge>(i));
        double d = distance(g, g.without_edge(a, b), opts).value;
        std::string anchor = fx.at("anchor").get<std::string>() + ", n=" + key + ", e" + std::to_string(i);
        std::string col = "D(DB_n, DB_n-e" + std::to_string(i) + ")";
        if (known)
          cells.push_back(relative_cell(anchor, "n=" + key, col, d,
                                        fx.at("distance").at(key).at(i - 1).get<double>(), tol("distance_relative")));
        else
          cells.push_back(info_cell(anchor, "n=" + key, col, d));
      }
      for (int i = 1; i <= 4; ++i) {
        double gap = dumbbell_gap(n, i);
        std::string anchor = fx.at("gap_anchor").get<std::string>() + ", n=" + key + ", i=" + std::to_string(i);
        std::string col = "gap e" + std::to_string(i);
        if (!known) {
          cells.push_back(info_cell(anchor, "n=" + key, col, gap));
          continue;
        }
        double want = fx.at("gap").at(key).at(i - 1).get<double>();
        if (want == 0) {
          Cell c = info_cell(anchor, "n=" + key, col, gap);
          c.expected = 0.0;
          c.tolerance = "abs 1e-10";
          c.status = gap < tol("gap_zero_absolute") ? CellStatus::kPass : CellStatus::kFail;
          cells.push_back(c);
        } else {
          cells.push_back(relative_cell(anchor, "n=" + key, col, gap, want, tol("gap_relative")));
        }
      }
      return cells;
    });
  }
  return tasks;
}

std::vector<Task> nearly_complete_tasks(const ExperimentSpec& spec, const std::vector<int>& sizes) {
  const json& fx = expected_values().at("nearly_complete");
  const auto opts = with_c(spec.distance, fx);
  std::set<std::pair<int, int>> red;
  for (const auto& p : fx.at("cospectral_minimizer")) red.emplace(p.at(0).get<int>(), p.at(1).get<int>());
  std::vector<Task> tasks;
  for (int n : sizes) {
    const std::string nk = std::to_string(n);
    std::vector<int> ms;
    if (fx.at("minimum").contains(nk)) {
      for (auto it = fx.at("minimum").at(nk).begin(); it != fx.at("minimum").at(nk).end(); ++it) ms.push_back(std::stoi(it.key()));
      std::sort(ms.begin(), ms.end());
    } else {
      for (int m = 2; m <= 7 && m <= n * (n - 1) / 2; ++m) ms.push_back(m);
    }
    for (int m : ms) {
      tasks.push_back([=, &fx] {
        const std::string mk = std::to_string(m);
        const std::string anchor = fx.at("anchor").get<std::string>() + ", n=" + nk + ", m=" + mk;
        auto reps = enumerate_edge_deletions(n, m);
        std::vector<Cell> cells;
        if (reps.size() < 2) {
          cells.push_back(info_cell(anchor, "n=" + nk, "m=" + mk, nullptr, "fewer than two classes"));
          return cells;
        }
        double best = INFINITY;
        size_t bi = 0, bj = 0;
        for (size_t i = 0; i < reps.size(); ++i)
          for (size_t j = i + 1; j < reps.size(); ++j) {
            double d = distance(reps[i], reps[j], opts).value;
            if (d < best) {
              best = d;
              bi = i;
              bj = j;
            }
          }
        const bool cospectral = characteristic_polynomial(laplacian_matrix(reps[bi])) ==
                                characteristic_polynomial(laplacian_matrix(reps[bj]));
        const bool known = fx.at("minimum").contains(nk) && fx.at("minimum").at(nk).contains(mk);
        Cell c = known ? relative_cell(anchor, "n=" + nk, "m=" + mk, best, fx.at("minimum").at(nk).at(mk).get<double>(),
                                       tol("distance_relative"))
                       : info_cell(anchor, "n=" + nk, "m=" + mk, best);
        c.note = "classes=" + std::to_string(reps.size()) + " pair=" + to_graph6(reps[bi]) + "," + to_graph6(reps[bj]);
        cells.push_back(c);
        if (known)
          cells.push_back(exact_cell(anchor, "n=" + nk, "m=" + mk + " cospectral minimizer", cospectral, red.count({n, m}) > 0));
        else
          cells.push_back(info_cell(anchor, "n=" + nk, "m=" + mk + " cospectral minimizer", cospectral));
        return cells;
      });
    }
  }
  return tasks;
}

// ---- strongly regular families ----

Cell class_cell(const std::string& anchor, const std::string& row, const std::string& col, const Classes& cl,
                const json& expected) {
  Cell c = exact_cell(anchor, row, col, cl.partition(), expected);
  c.note = "nodes=" + std::to_string(cl.nodes);
  if (cl.exhausted) c.status = CellStatus::kExhausted;
  return c;
}

std::vector<Task> srg16_tasks(const ExperimentSpec& spec) {
  const json& fx = expected_values().at("srg16");
  auto family = std::make_shared<std::vector<std::pair<std::string, Graph>>>(srg_family(fx, spec.corpus));
  const std::string anchor = fx.at("anchor").get<std::string>();
  std::vector<Task> tasks;
  for (auto it = fx.at("square_shift_classes").begin(); it != fx.at("square_shift_classes").end(); ++it) {
    const int m = std::stoi(it.key());
    const int want = it.value().get<int>();
    tasks.push_back([=, budget = spec.budget] {
      std::vector<IntMatrix> forms;
      for (const auto& [name, g] : *family) forms.push_back(shifted_square(g, m));
      auto cl = isometry_classes(forms, budget);
      Cell c = exact_cell(anchor + ", srg(16,6,2,2), m=" + it.key(), "srg(16,6,2,2)", "(A" + std::string(m < 0 ? "" : "+") +
                          std::to_string(m) + "I)^2 classes", cl.count(), want);
      c.note = "partition=" + joined(cl.partition()) + " nodes=" + std::to_string(cl.nodes);
      if (cl.exhausted) c.status = CellStatus::kExhausted;
      return std::vector<Cell>{c};
    });
  }
  tasks.push_back([=] {
    std::vector<Cell> cells;
    for (const auto& [name, g] : *family) {
      if (!fx.at("adjacency_symbols").contains(name)) continue;
      IntMatrix a = adjacency_matrix(g);
      for (int p : {2, 3})
        cells.push_back(exact_cell(anchor + ", A, p=" + std::to_string(p), name, "p=" + std::to_string(p), symbol_at(a, p),
                                   fx.at("adjacency_symbols").at(name).at(std::to_string(p))));
      IntMatrix a1 = adjacency_matrix(g) + IntMatrix::identity(g.order());
      for (int p : {3, 7})
        cells.push_back(exact_cell(anchor + ", A+I, p=" + std::to_string(p), name, "p=" + std::to_string(p),
                                   padic_symbol(a1, p).to_compact_string(), fx.at("shifted_symbols").at(std::to_string(p))));
    }
    // The raw 2-adic row depends on the labelling; the canonical symbol does not.
    IntMatrix natural = adjacency_matrix(shrikhande_graph());
    IntMatrix fixture = adjacency_matrix(family->at(1).second);
    cells.push_back(exact_cell(anchor + ", A, p=2", "shrikhande", "natural labelling same canonical 2-adic symbol",
                               padic_symbol(natural, 2).equivalent(padic_symbol(fixture, 2)), true));
    return cells;
  });
  tasks.push_back([=] {
    return std::vector<Cell>{st_pair_cell("ST invariant", "srg(16,6,2,2)", family->at(0).second, family->at(1).second)};
  });
  return tasks;
}

std::vector<Task> srg28_tasks(const ExperimentSpec& spec) {
  const json& fx = expected_values().at("srg28");
  auto family = std::make_shared<std::vector<std::pair<std::string, Graph>>>(srg_family(fx, spec.corpus));
  const std::string anchor = fx.at("anchor").get<std::string>();
  const std::string singleton = fx.at("singleton").get<std::string>();
  std::vector<Task> tasks;
  for (auto it = fx.at("square_shift_partition").begin(); it != fx.at("square_shift_partition").end(); ++it) {
    const int m = std::stoi(it.key());
    const json want = it.value();
    tasks.push_back([=, budget = spec.budget] {
      std::vector<IntMatrix> forms;
      for (const auto& [name, g] : *family) forms.push_back(shifted_square(g, m));
      auto cl = isometry_classes(forms, budget);
      std::vector<Cell> cells{class_cell(anchor + ", srg(28,12,6,4), m=" + it.key(), "srg(28,12,6,4)",
                                         "(A" + std::string(m < 0 ? "" : "+") + std::to_string(m) + "I)^2 partition", cl, want)};
      if (want.size() == 2) {
        // The singleton class must be the named graph.
        int idx = -1;
        for (size_t i = 0; i < family->size(); ++i)
          if ((*family)[i].first == singleton) idx = static_cast<int>(i);
        int size = static_cast<int>(std::count(cl.class_of.begin(), cl.class_of.end(), cl.class_of[idx]));
        cells.push_back(exact_cell(anchor + ", srg(28,12,6,4), m=" + it.key(), "srg(28,12,6,4)",
                                   singleton + " alone in its class", size == 1, true));
      }
      return cells;
    });
  }
  tasks.push_back([=] {
    std::vector<Cell> cells;
    std::vector<PadicSymbol> two;
    for (const auto& [name, g] : *family) {
      IntMatrix a = adjacency_matrix(g);
      two.push_back(padic_symbol(a, 2));
      const std::string key = name.rfind("chang", 0) == 0 ? "chang" : name;
      for (int p : {2, 3}) {
        std::string s = p == 2 ? two.back().to_list_string() : symbol_at(a, p);
        if (fx.at("adjacency_symbols").contains(key))
          cells.push_back(exact_cell(anchor + ", A, p=" + std::to_string(p), name, "p=" + std::to_string(p), s,
                                     fx.at("adjacency_symbols").at(key).at(std::to_string(p))));
        else
          cells.push_back(info_cell(anchor + ", A, p=" + std::to_string(p), name, "p=" + std::to_string(p), s));
      }
    }
    std::vector<int> class_of;
    std::vector<int> reps;
    for (size_t i = 0; i < two.size(); ++i) {
      int found = -1;
      for (size_t r = 0; r < reps.size() && found < 0; ++r)
        if (two[reps[r]].equivalent(two[i])) found = static_cast<int>(r);
      if (found < 0) {
        found = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
      }
      class_of.push_back(found);
    }
    Classes cl;
    cl.class_of = class_of;
    cells.push_back(class_cell(anchor + ", A, p=2", "srg(28,12,6,4)", "2-adic symbol partition", cl,
                               fx.at("square_shift_partition").at("2")));
    return cells;
  });
  return tasks;
}

// ---- CFI ----

std::vector<Graph> cubic_bases(const std::vector<int>& sizes) {
  std::vector<Graph> out;
  for (int n : sizes)
    for (auto& g : enumerate_cubic(n))
      if (g.connected()) out.push_back(std::move(g));
  return out;
}

std::vector<Task> cfi_symbol_tasks(const ExperimentSpec&, const std::vector<int>& sizes) {
  const json& fx = expected_values().at("cfi");
  const std::string anchor = fx.at("anchor").get<std::string>();
  std::vector<Task> tasks;
  tasks.push_back([=, &fx] {
    std::vector<Cell> cells;
    auto pair = cfi_pair(load_graph(fx.at("base").get<std::string>()));
    const Graph* g[2] = {&pair.untwisted, &pair.twisted};
    std::vector<PadicSymbol> s2, s3;
    for (int i = 0; i < 2; ++i) {
      IntMatrix a = adjacency_matrix(*g[i]);
      s2.push_back(padic_symbol(a, 2));
      s3.push_back(padic_symbol(a, 3));
      const std::string row = i ? "CFI(K4) twisted" : "CFI(K4) untwisted";
      cells.push_back(exact_cell(anchor + ", p=2", row, "p=2", s2.back().to_list_string(), fx.at("symbols").at(i).at("2")));
      cells.push_back(exact_cell(anchor + ", p=3", row, "p=3", s3.back().to_list_string(), fx.at("symbols").at(i).at("3")));
    }
    cells.push_back(exact_cell(anchor, "CFI(K4)", "separated at p=2", !s2[0].equivalent(s2[1]), true));
    cells.push_back(exact_cell(anchor, "CFI(K4)", "identical at p=3", s3[0].to_list_string() == s3[1].to_list_string(), true));
    cells.push_back(st_pair_cell("ST invariant", "CFI(K4)", pair.untwisted, pair.twisted));
    return cells;
  });
  // Other cubic bases: report only.
  for (const auto& base : cubic_bases(sizes)) {
    if (base.order() == 4) continue;
    tasks.push_back([=] {
      auto pair = cfi_pair(base);
      IntMatrix a0 = adjacency_matrix(pair.untwisted), a1 = adjacency_matrix(pair.twisted);
      const std::string row = "CFI(" + to_graph6(base) + ")";
      if (exact_det(a0) == 0 || exact_det(a1) == 0)
        return std::vector<Cell>{info_cell(anchor, row, "det A", 0, "singular adjacency; skipped")};
      auto p0 = padic_symbol(a0, 2), p1 = padic_symbol(a1, 2);
      Cell c = info_cell(anchor, row, "separated at p=2", !p0.equivalent(p1));
      c.note = p0.to_list_string() + " | " + p1.to_list_string();
      return std::vector<Cell>{c};
    });
  }
  return tasks;
}

std::vector<Task> cfi_prime_tasks(const ExperimentSpec&, const std::vector<int>& sizes) {
  const json& fx = expected_values().at("cfi");
  const int cap = fx.at("max_distinct_primes").get<int>();
  const std::string anchor = fx.at("prime_factor_anchor").get<std::string>();
  std::vector<Task> tasks;
  for (const auto& base : cubic_bases(sizes)) {
    tasks.push_back([=] {
      auto pair = cfi_pair(base);
      std::vector<Cell> cells;
      const Graph* g[2] = {&pair.untwisted, &pair.twisted};
      for (int i = 0; i < 2; ++i) {
        const std::string row = "CFI(" + to_graph6(base) + ")" + (i ? " twisted" : " untwisted");
        IntMatrix form = adjacency_matrix(*g[i]) + IntMatrix::identity(g[i]->order()).scaled(2);
        mpz_class det = exact_det(form);
        std::string source = "det(A+2I)";
        if (det == 0) {
          // Singular: use the nondegenerate part, as for other degenerate forms.
          auto q = saturation_quotient(form);
          det = exact_det(q.gram);
          source = "det of saturation quotient, corank " + std::to_string(q.corank);
        }
        Cell c = info_cell(anchor + ", vertices=" + std::to_string(g[i]->order()), row, "distinct primes of det(A+2I)", nullptr);
        auto f = prime_factorization(det);
        int count = static_cast<int>(f.distinct_primes().size());
        c.value = count;
        c.expected = "<= " + std::to_string(cap);
        c.tolerance = "bound";
        c.status = f.complete() && count <= cap ? CellStatus::kPass : (f.complete() ? CellStatus::kFail : CellStatus::kExhausted);
        std::ostringstream os;
        os << source << "; largest prime " << (f.primes.empty() ? mpz_class(1) : f.primes.back());
        c.note = os.str();
        cells.push_back(c);
      }
      return cells;
    });
  }
  return tasks;
}

// ---- Laplacian forms ----

Cell equivalence_cell(const std::string& anchor, const std::string& row, const std::string& col, bool all_equivalent,
                      bool exhausted, bool want, const std::string& note) {
  Cell c = exact_cell(anchor, row, col, all_equivalent, want);
  c.note = note;
  if (exhausted) c.status = CellStatus::kExhausted;
  return c;
}

std::vector<Task> tree_tasks(const ExperimentSpec& spec, const std::vector<int>& sizes) {
  std::vector<Task> tasks;
  for (int n : sizes) {
    tasks.push_back([=, budget = spec.budget] {
      auto trees = enumerate_trees(n);
      bool all = true, exhausted = false;
      long long pairs = 0;
      for (size_t i = 0; i < trees.size(); ++i)
        for (size_t j = i + 1; j < trees.size(); ++j) {
          auto r = laplacian_form_equivalent(trees[i], trees[j], budget);
          ++pairs;
          exhausted |= r.verdict == IsometryVerdict::kExhausted;
          all &= r.verdict == IsometryVerdict::kIsometric;
        }
      return std::vector<Cell>{equivalence_cell("trees", "n=" + std::to_string(n), "all pairs Laplacian-equivalent", all,
                                                exhausted && !all, true,
                                                "trees=" + std::to_string(trees.size()) + " pairs=" + std::to_string(pairs))};
    });
  }
  tasks.push_back([budget = spec.budget] {
    auto r = laplacian_form_equivalent(path_graph(3), cycle_graph(3), budget);
    Cell c = exact_cell("trees", "P3 vs C3", "Laplacian-equivalent", to_string(r.verdict), "not_isometric");
    c.note = r.separating_invariant;
    return std::vector<Cell>{c};
  });
  return tasks;
}

Graph random_connected(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (g.connected()) return g;
  }
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Task> wedge_tasks(const ExperimentSpec& spec, const std::vector<int>& sizes) {
  const int trials = sizes.empty() ? 20 : sizes.front();
  const std::string anchor = "wedge monoid";
  std::vector<Task> tasks;
  // Each task draws from its own stream so results do not depend on scheduling.
  auto stream = [seed = spec.seed](int k) { return std::mt19937_64(seed * 1000003ULL + static_cast<unsigned>(k)); };
  const auto budget = spec.budget;

  tasks.push_back([=] {
    auto rng = stream(1);
    bool all = true, exhausted = false;
    int checks = 0;
    for (int t = 0; t < trials; ++t) {
      Graph g1 = random_connected(rng, uniform(rng, 2, 4));
      Graph g2 = random_connected(rng, uniform(rng, 2, 4));
      Graph ref = wedge_sum(g1, 0, g2, 0);
      for (int x = 0; x < g1.order(); ++x)
        for (int y = 0; y < g2.order(); ++y) {
          auto r = laplacian_form_equivalent(ref, wedge_sum(g1, x, g2, y), budget);
          ++checks;
          exhausted |= r.verdict == IsometryVerdict::kExhausted;
          all &= r.verdict == IsometryVerdict::kIsometric;
        }
    }
    return std::vector<Cell>{equivalence_cell(anchor, "independence of wedge points", "all equivalent", all,
                                              exhausted && !all, true, "checks=" + std::to_string(checks))};
  });

  tasks.push_back([=] {
    // Equivalent, non-isomorphic representatives: trees and same-class connected graphs on <= 5 vertices.
    std::vector<std::pair<Graph, Graph>> swaps;
    for (int n = 4; n <= 5; ++n) {
      auto trees = enumerate_trees(n);
      for (size_t i = 1; i < trees.size(); ++i) swaps.emplace_back(trees[0], trees[i]);
    }
    std::vector<Graph> connected;
    for (int m = 0; m <= 5; ++m)
      for (auto& g : enumerate_edge_deletions(5, m))
        if (g.connected()) connected.push_back(g);
    for (size_t i = 0; i < connected.size(); ++i)
      for (size_t j = i + 1; j < connected.size(); ++j)
        if (connected[i].size() == connected[j].size() &&
            laplacian_form_equivalent(connected[i], connected[j], budget).verdict == IsometryVerdict::kIsometric)
          swaps.emplace_back(connected[i], connected[j]);
    auto rng = stream(2);
    bool all = true, exhausted = false;
    int checks = 0;
    for (int t = 0; t < trials; ++t) {
      const auto& [a, b] = swaps[static_cast<size_t>(uniform(rng, 0, static_cast<int>(swaps.size()) - 1))];
      Graph h = random_connected(rng, uniform(rng, 1, 3));
      auto r = laplacian_form_equivalent(wedge_sum(a, uniform(rng, 0, a.order() - 1), h, 0),
                                         wedge_sum(b, uniform(rng, 0, b.order() - 1), h, 0), budget);
      ++checks;
      exhausted |= r.verdict == IsometryVerdict::kExhausted;
      all &= r.verdict == IsometryVerdict::kIsometric;
    }
    return std::vector<Cell>{equivalence_cell(anchor, "well defined on classes", "all equivalent", all, exhausted && !all,
                                              true,
                                              "checks=" + std::to_string(checks) + " swap pairs=" + std::to_string(swaps.size()))};
  });

  tasks.push_back([=] {
    auto rng = stream(3);
    bool comm = true, assoc = true, exhausted = false;
    for (int t = 0; t < trials; ++t) {
      Graph g[3];
      for (auto& x : g) x = random_connected(rng, uniform(rng, 1, 3));
      int x0 = uniform(rng, 0, g[0].order() - 1), x1 = uniform(rng, 0, g[1].order() - 1);
      auto r1 = laplacian_form_equivalent(wedge_sum(g[0], x0, g[1], x1), wedge_sum(g[1], x1, g[0], x0), budget);
      Graph left = wedge_sum(wedge_sum(g[0], x0, g[1], x1), uniform(rng, 0, g[0].order() + g[1].order() - 2), g[2], 0);
      Graph right = wedge_sum(g[0], x0, wedge_sum(g[1], x1, g[2], uniform(rng, 0, g[2].order() - 1)), x1);
      auto r2 = laplacian_form_equivalent(left, right, budget);
      exhausted |= r1.verdict == IsometryVerdict::kExhausted || r2.verdict == IsometryVerdict::kExhausted;
      comm &= r1.verdict == IsometryVerdict::kIsometric;
      assoc &= r2.verdict == IsometryVerdict::kIsometric;
    }
    return std::vector<Cell>{
        equivalence_cell(anchor, "commutativity", "all equivalent", comm, exhausted && !comm, true, ""),
        equivalence_cell(anchor, "associativity", "all equivalent", assoc, exhausted && !assoc, true, ""),
    };
  });
  return tasks;
}

// ---- embeddings ----

std::vector<Cell> embedding_pair_cells(const std::string& anchor, const std::string& row, const RotationSystem& r1,
                                       const RotationSystem& r2, const IsometryBudget& budget) {
  auto e1 = trace_faces(r1), e2 = trace_faces(r2);
  std::vector<Cell> cells;
  for (const auto* p : {&r1, &r2}) {
    auto e = trace_faces(*p);
    const int v = p->graph.order(), ed = p->graph.size(), f = static_cast<int>(e.faces.size());
    Cell c = exact_cell(anchor, row + " " + to_graph6(p->graph), "V-E+F = 2-2g", v - ed + f, 2 - 2 * e.genus);
    c.note = "genus=" + std::to_string(e.genus);
    cells.push_back(c);
  }
  cells.push_back(info_cell(anchor, row, "graphs isomorphic", find_isomorphism(r1.graph, r2.graph).has_value()));
  cells.push_back(info_cell(anchor, row, "duals isomorphic", dual_isomorphic(e1, e2)));
  auto eq = laplacian_form_equivalent(r1.graph, r2.graph, budget);
  Cell c = info_cell(anchor, row, "Laplacian forms", to_string(eq.verdict), eq.separating_invariant);
  cells.push_back(c);
  cells.push_back(info_cell(anchor, row, "rotation systems", json::array({r1.to_json(), r2.to_json()})));
  return cells;
}

std::vector<Task> dual_tasks(const ExperimentSpec& spec) {
  std::vector<Task> tasks;
  const auto budget = spec.budget;
  tasks.push_back([=] {
    // A 4-cycle drawn as a square with triangles glued on adjacent or opposite sides.
    Graph c4 = cycle_graph(4);
    auto square = RotationSystem::from_coordinates(c4, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto adjacent = glue_cycle_along_edge(glue_cycle_along_edge(square, 1, 0, 2), 2, 1, 2);
    auto opposite = glue_cycle_along_edge(glue_cycle_along_edge(square, 1, 0, 2), 3, 2, 2);
    return embedding_pair_cells("genus 0 reconstruction", "C4 + two triangles", adjacent, opposite, budget);
  });
  tasks.push_back([=] {
    // First genus-1 rotation of K5 in lexicographic order, then two glued 4-cycles.
    Graph k5 = complete_graph(5);
    std::vector<std::vector<int>> order(5);
    std::vector<std::vector<std::vector<int>>> choices(5);
    for (int v = 0; v < 5; ++v) {
      std::vector<int> rest = k5.neighbors(v);
      std::sort(rest.begin() + 1, rest.end());
      do choices[v].push_back(rest);
      while (std::next_permutation(rest.begin() + 1, rest.end()));
    }
    std::optional<RotationSystem> torus;
    for (int code = 0; code < 7776 && !torus; ++code) {
      int c = code;
      for (int v = 0; v < 5; ++v, c /= 6) order[v] = choices[v][c % 6];
      auto r = RotationSystem::from_neighbor_order(k5, order);
      if (trace_faces(r).genus == 1) torus = r;
    }
    std::vector<std::pair<int, int>> darts;
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        if (x != y) darts.emplace_back(x, y);
    std::vector<RotationSystem> glued;
    for (size_t i = 0; i < darts.size(); ++i)
      for (size_t j = i + 1; j < darts.size(); ++j) {
        auto r = glue_cycle_along_edge(*torus, darts[i].first, darts[i].second, 3);
        glued.push_back(glue_cycle_along_edge(r, darts[j].first, darts[j].second, 3));
      }
    std::vector<EmbeddingReport> reps;
    for (const auto& r : glued) reps.push_back(trace_faces(r));
    // Tally every non-isomorphic pair with isomorphic duals; show the first equivalent one.
    int pairs = 0, equivalent = 0;
    std::optional<std::pair<size_t, size_t>> shown, fallback;
    for (size_t i = 0; i < glued.size(); ++i)
      for (size_t j = i + 1; j < glued.size(); ++j) {
        if (reps[i].genus != 1 || reps[j].genus != 1) continue;
        if (!dual_isomorphic(reps[i], reps[j])) continue;
        if (find_isomorphism(glued[i].graph, glued[j].graph)) continue;
        ++pairs;
        if (!fallback) fallback = {i, j};
        if (laplacian_form_equivalent(glued[i].graph, glued[j].graph, budget).verdict == IsometryVerdict::kIsometric) {
          ++equivalent;
          if (!shown) shown = {i, j};
        }
      }
    if (!shown) shown = fallback;
    if (!shown)
      return std::vector<Cell>{info_cell("genus 1 reconstruction", "K5 + two 4-cycles", "pair", nullptr,
                                         "no non-isomorphic pair with isomorphic duals found")};
    auto cells = embedding_pair_cells("genus 1 reconstruction", "K5 + two 4-cycles", glued[shown->first],
                                      glued[shown->second], budget);
    cells.push_back(info_cell("genus 1 reconstruction", "K5 + two 4-cycles", "pairs with isomorphic duals", pairs));
    cells.push_back(info_cell("genus 1 reconstruction", "K5 + two 4-cycles", "of which Laplacian-equivalent", equivalent));
    return cells;
  });
  return tasks;
}

}  // namespace

const std::vector<std::string>& experiment_tags() {
  static const std::vector<std::string> tags{"dumbbell",    "complete-cycle",    "nearly-complete", "srg16",        "srg28",
                                             "cfi-symbols", "cfi-prime-factors", "tree-forms",      "wedge-monoid", "dual-conjecture"};
  return tags;
}

void ExperimentSpec::validate() const {
  const auto& tags = experiment_tags();
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) throw Error("unknown experiment tag: " + tag);
  for (int n : sizes) {
    bool ok = true;
    if (tag == "dumbbell" || tag == "complete-cycle") ok = n >= 3 && n <= 500;
    if (tag == "nearly-complete") ok = n >= 2 && n <= 7;
    if (tag == "cfi-symbols" || tag == "cfi-prime-factors") ok = n >= 4 && n <= 8 && n % 2 == 0;
    if (tag == "tree-forms") ok = n >= 1 && n <= 10;
    if (tag == "wedge-monoid") ok = n >= 1 && n <= 1000;
    if (!ok) throw Error("size " + std::to_string(n) + " outside the supported range for " + tag);
  }
  if (budget.max_nodes <= 0 || budget.max_vectors <= 0 || !(budget.max_seconds > 0)) throw Error("budgets must be positive");
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const std::vector<int> sizes = spec.sizes.empty() ? default_sizes(spec.tag) : spec.sizes;
  std::vector<Task> tasks;
  if (spec.tag == "complete-cycle") tasks = complete_cycle_tasks(spec, sizes);
  else if (spec.tag == "dumbbell") tasks = dumbbell_tasks(spec, sizes);
  else if (spec.tag == "nearly-complete") tasks = nearly_complete_tasks(spec, sizes);
  else if (spec.tag == "srg16") tasks = srg16_tasks(spec);
  else if (spec.tag == "srg28") tasks = srg28_tasks(spec);
  else if (spec.tag == "cfi-symbols") tasks = cfi_symbol_tasks(spec, sizes);
  else if (spec.tag == "cfi-prime-factors") tasks = cfi_prime_tasks(spec, sizes);
  else if (spec.tag == "tree-forms") tasks = tree_tasks(spec, sizes);
  else if (spec.tag == "wedge-monoid") tasks = wedge_tasks(spec, sizes);
  else if (spec.tag == "dual-conjecture") tasks = dual_tasks(spec);

  ExperimentReport rep;
  rep.tag = spec.tag;
  rep.seed = spec.seed;
  for (auto& cells : run_tasks(tasks, spec.threads))
    for (auto& c : cells) rep.cells.push_back(std::move(c));
  return rep;
}

}  // namespace graphforms
