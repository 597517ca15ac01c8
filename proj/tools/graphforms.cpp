// graphforms command-line interface.
#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "graphforms/distance.hpp"
#include "graphforms/embedding.hpp"
#include "graphforms/experiments.hpp"
#include "graphforms/graph_io.hpp"
#include "graphforms/isometry.hpp"
#include "graphforms/qform.hpp"
#include "graphforms/spectral.hpp"

using namespace graphforms;
using nlohmann::json;

namespace {

// "A", "L", "A+3I", "A-2I", "(A+2I)^2", "poly:c0,c1,...[;q]" (f(A) + qJ).
IntMatrix parse_form(const std::string& text, const Graph& g) {
  const int n = g.order();
  std::smatch m;
  if (text == "A") return adjacency_matrix(g);
  if (text == "L") return laplacian_matrix(g);
  static const std::regex shifted(R"(^(\()?A([+-]\d+)I(\))?(\^2)?$)");
  if (std::regex_match(text, m, shifted)) {
    const bool paren = m[1].matched, close = m[3].matched, square = m[4].matched;
    if (paren != close || (square && !paren)) throw Error("malformed form: " + text);
    std::string k = m[2].str();
    if (k[0] == '+') k.erase(0, 1);  // mpz_set_str rejects a leading '+'
    IntMatrix b = adjacency_matrix(g) + IntMatrix::identity(n).scaled(mpz_class(k));
    return square ? b * b : b;
  }
  if (text.rfind("poly:", 0) == 0) {
    std::string body = text.substr(5);
    mpz_class q = 0;
    if (auto semi = body.find(';'); semi != std::string::npos) {
      q = mpz_class(body.substr(semi + 1));
      body = body.substr(0, semi);
    }
    IntPolynomial f;
    std::stringstream ss(body);
    for (std::string c; std::getline(ss, c, ',');) f.coeffs.emplace_back(c);
    f.trim();
    return eval_matrix_poly(adjacency_matrix(g), f, q);
  }
  throw Error("unknown form '" + text + "' (use A, L, A+kI, (A+kI)^2 or poly:c0,c1,...[;q])");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

struct Common {
  std::string format = "json";
  std::uint64_t seed = 1;
  IsometryBudget budget;
};

void emit(const Common& c, const json& j, const std::string& table) {
  if (c.format == "table")
    std::cout << table;
  else
    std::cout << j.dump(2) << '\n';
}

int verdict_exit(const IsometryResult& r) { return r.verdict == IsometryVerdict::kExhausted ? 3 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and quadratic-form graph invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", common.seed, "RNG seed");
  app.add_option("--budget-nodes", common.budget.max_nodes, "Isometry backtracking node budget");
  app.add_option("--budget-vectors", common.budget.max_vectors, "Short-vector budget");
  app.add_option("--budget-seconds", common.budget.max_seconds, "Isometry wall-clock budget");
  int exit_code = 0;

  // gen
  std::string gen_spec, gen_as = "g6";
  auto* gen = app.add_subcommand("gen", "Build a named graph, e.g. dumbbell:5, shrikhande, chang:2");
  gen->add_option("family", gen_spec)->required();
  gen->add_option("--as", gen_as, "Graph encoding")->check(CLI::IsMember({"g6", "json", "edges"}));
  gen->callback([&] {
    Graph g = load_graph(gen_spec);
    if (gen_as == "g6") std::cout << to_graph6(g) << '\n';
    else if (gen_as == "edges") std::cout << to_edge_list(g);
    else std::cout << graph_to_json(g).dump(2) << '\n';
  });

  // matrices
  std::string mat_graph, mat_form;
  auto* mats = app.add_subcommand("matrices", "Adjacency and Laplacian matrices, or a polynomial form");
  mats->add_option("graph", mat_graph)->required();
  mats->add_option("--form", mat_form, "Form to print instead of A and L");
  mats->callback([&] {
    Graph g = load_graph(mat_graph);
    json j;
    if (!mat_form.empty()) {
      IntMatrix f = parse_form(mat_form, g);
      j[mat_form] = to_json(f);
      emit(common, j, f.to_string() + "\n");
      return;
    }
    IntMatrix a = adjacency_matrix(g), l = laplacian_matrix(g);
    j["A"] = to_json(a);
    j["L"] = to_json(l);
    emit(common, j, "A\n" + a.to_string() + "\nL\n" + l.to_string() + "\n");
  });

  // st
  std::vector<std::string> st_graphs;
  double st_tol = 1e-6;
  auto* st = app.add_subcommand("st", "ST invariant of one graph, or comparison of two");
  st->add_option("graphs", st_graphs)->required()->expected(1, 2);
  st->add_option("--tol", st_tol, "Comparison tolerance");
  st->callback([&] {
    auto a = st_invariant(load_graph(st_graphs[0]));
    if (st_graphs.size() == 1) {
      emit(common, a.to_json(), "records " + std::to_string(a.records.size()) + "\n");
      return;
    }
    bool eq = st_equal(a, st_invariant(load_graph(st_graphs[1])), st_tol);
    emit(common, json{{"equal", eq}, {"tolerance", st_tol}}, std::string(eq ? "equal" : "different") + "\n");
  });

  // dist
  std::string d1, d2;
  DistanceOptions dopts;
  bool pad = false;
  auto* dist = app.add_subcommand("dist", "Spectral distance between two graphs");
  dist->add_option("g1", d1)->required();
  dist->add_option("g2", d2)->required();
  dist->add_option("--c", dopts.c, "Sampling constant c");
  dist->add_option("--samples", dopts.samples, "Number of samples S (default |V|)");
  dist->add_flag("--pad", pad, "Pad the smaller graph with isolated vertices");
  dist->callback([&] {
    Graph a = load_graph(d1), b = load_graph(d2);
    bool padded = false;
    if (a.order() != b.order()) {
      if (!pad) throw Error("graphs have different orders; use --pad");
      const int n = std::max(a.order(), b.order());
      a = pad_isolated(a, n);
      b = pad_isolated(b, n);
      padded = true;
    }
    auto r = distance(a, b, dopts);
    r.padded = padded;
    std::ostringstream os;
    os.precision(10);
    os << r.value << '\n';
    emit(common, r.to_json(), os.str());
  });

  // qf-symbol
  std::string qs_graph, qs_form = "A";
  std::vector<std::string> qs_primes;
  auto* qsym = app.add_subcommand("qf-symbol", "p-adic symbols of f(A) for all p | 2 det, or the given primes");
  qsym->add_option("graph", qs_graph)->required();
  qsym->add_option("--form", qs_form, "Quadratic form");
  qsym->add_option("--p", qs_primes, "Primes");
  qsym->callback([&] {
    IntMatrix f = parse_form(qs_form, load_graph(qs_graph));
    std::vector<PadicSymbol> syms;
    if (qs_primes.empty()) syms = genus_symbol_list(f);
    for (const auto& p : qs_primes) syms.push_back(padic_symbol(f, mpz_class(p)));
    json j = json::array();
    std::string table;
    for (const auto& s : syms) {
      j.push_back({{"p", s.p.get_str()}, {"list", s.to_list_string()}, {"compact", s.to_compact_string()}});
      table += "p=" + s.p.get_str() + "  " + s.to_list_string() + "  " + s.to_compact_string() + "\n";
    }
    emit(common, j, table);
  });

  // qf-local-eq
  std::string le1, le2, le_form = "A";
  auto* qle = app.add_subcommand("qf-local-eq", "Compare genus symbols of two forms");
  qle->add_option("g1", le1)->required();
  qle->add_option("g2", le2)->required();
  qle->add_option("--form", le_form, "Quadratic form");
  qle->callback([&] {
    auto r = local_equivalence(parse_form(le_form, load_graph(le1)), parse_form(le_form, load_graph(le2)));
    json j{{"equivalent", r.equivalent}, {"reason", r.reason}, {"witness_prime", r.witness_prime.get_str()}};
    emit(common, j, std::string(r.equivalent ? "locally equivalent" : "not locally equivalent: " + r.reason) + "\n");
  });

  // qf-isometric
  std::string is1, is2, is_form = "A";
  auto* qis = app.add_subcommand("qf-isometric", "Z-isometry of f(A) forms; singular forms use the saturation quotient");
  qis->add_option("g1", is1)->required();
  qis->add_option("g2", is2)->required();
  qis->add_option("--form", is_form, "Quadratic form");
  qis->callback([&] {
    IntMatrix f1 = parse_form(is_form, load_graph(is1)), f2 = parse_form(is_form, load_graph(is2));
    IsometryResult r = exact_det(f1) == 0 || exact_det(f2) == 0 ? semidefinite_equivalent(f1, f2, common.budget)
                                                                : is_isometric(f1, f2, common.budget);
    emit(common, r.to_json(), to_string(r.verdict) + (r.separating_invariant.empty() ? "" : " (" + r.separating_invariant + ")") + "\n");
    exit_code = verdict_exit(r);
  });

  // cfi
  std::string cfi_base;
  auto* cfi = app.add_subcommand("cfi", "CFI pair of a base graph (graph6 lines: untwisted, twisted)");
  cfi->add_option("base", cfi_base)->required();
  cfi->callback([&] {
    auto p = cfi_pair(load_graph(cfi_base));
    json j{{"untwisted", to_graph6(p.untwisted)}, {"twisted", to_graph6(p.twisted)},
           {"twist_edge", {p.twist_edge.first, p.twist_edge.second}}};
    emit(common, j, to_graph6(p.untwisted) + "\n" + to_graph6(p.twisted) + "\n");
  });

  // wedge
  std::string w1, w2;
  int wx = 0, wy = 0;
  auto* wedge = app.add_subcommand("wedge", "Wedge sum identifying vertex x of g1 with vertex y of g2");
  wedge->add_option("g1", w1)->required();
  wedge->add_option("x", wx)->required();
  wedge->add_option("g2", w2)->required();
  wedge->add_option("y", wy)->required();
  wedge->callback([&] {
    Graph g = wedge_sum(load_graph(w1), wx, load_graph(w2), wy);
    emit(common, graph_to_json(g), to_graph6(g) + "\n");
  });

  // blocks
  std::string bl_graph;
  auto* blocks = app.add_subcommand("blocks", "Simple components (blocks) and cut vertices");
  blocks->add_option("graph", bl_graph)->required();
  blocks->callback([&] {
    Graph g = load_graph(bl_graph);
    json j{{"cut_vertices", cut_vertices(g)}, {"blocks", json::array()}};
    std::string table;
    for (const auto& b : block_decomposition(g)) {
      j["blocks"].push_back({{"vertices", b.vertices}, {"graph6", to_graph6(b.graph)}});
      table += to_graph6(b.graph) + "  " + json(b.vertices).dump() + "\n";
    }
    emit(common, j, table);
  });

  // dual
  std::string dual_file;
  auto* dual = app.add_subcommand("dual", "Faces, genus and dual multigraph of a rotation system (JSON file)");
  dual->add_option("rotation", dual_file)->required()->check(CLI::ExistingFile);
  dual->callback([&] {
    std::ifstream in(dual_file);
    auto r = RotationSystem::from_json(json::parse(in));
    auto e = trace_faces(r);
    emit(common, e.to_json(),
         "genus " + std::to_string(e.genus) + ", faces " + std::to_string(e.faces.size()) + "\n");
  });

  // experiment
  ExperimentSpec spec;
  std::string sizes, out_path;
  auto* exp = app.add_subcommand("experiment", "Run a table-reproduction experiment");
  exp->add_option("tag", spec.tag)->required()->check(CLI::IsMember(experiment_tags()));
  exp->add_option("--sizes", sizes, "Comma-separated parameter range (tag specific)");
  exp->add_option("--corpus", spec.corpus, "Directory of graph6 files")->check(CLI::ExistingDirectory);
  exp->add_option("--threads", spec.threads, "Worker threads (0 = all cores)");
  exp->add_option("--out", out_path, "Also write the JSON report here");
  exp->callback([&] {
    spec.sizes = parse_int_list(sizes);
    spec.seed = common.seed;
    spec.budget = common.budget;
    auto start = std::chrono::steady_clock::now();
    auto rep = run_experiment(spec);
    emit(common, rep.to_json(), rep.to_table());
    if (!out_path.empty()) std::ofstream(out_path) << rep.to_json().dump(2) << '\n';
    std::cerr << spec.tag << ": " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " s\n";
    exit_code = rep.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
