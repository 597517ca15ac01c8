#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "graphforms/graph.hpp"

namespace graphforms {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int arity;
};

constexpr std::array<FamilyInfo, 11> kFamilies{{
    {Family::kComplete, "complete", 1},
    {Family::kCycle, "cycle", 1},
    {Family::kPath, "path", 1},
    {Family::kStar, "star", 1},
    {Family::kDumbbell, "dumbbell", 1},
    {Family::kRook4x4, "rook4x4", 0},
    {Family::kShrikhande, "shrikhande", 0},
    {Family::kPaley25, "paley25", 0},
    {Family::kTriangular, "triangular", 1},
    {Family::kChang, "chang", 1},
    {Family::kEmpty, "empty", 1},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  std::string name = text;
  std::vector<int> params;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        params.push_back(std::stoi(tok, &used));
        require(used == tok.size(), "bad family parameter '" + tok + "'");
      } catch (const std::logic_error&) {
        throw Error("bad family parameter '" + tok + "'");
      }
    }
  }
  for (const auto& f : kFamilies) {
    if (name == f.name) {
      require(static_cast<int>(params.size()) == f.arity,
              "family '" + name + "' takes " + std::to_string(f.arity) + " parameter(s)");
      return FamilySpec{f.family, params};
    }
  }
  throw Error("unknown graph family '" + name + "'");
}

std::string FamilySpec::to_string() const {
  for (const auto& f : kFamilies) {
    if (f.family != family) continue;
    std::string s = f.name;
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : ":") + std::to_string(params[i]);
    return s;
  }
  return "?";
}

Graph make_graph(const FamilySpec& spec) {
  auto p = [&](size_t i) { return spec.params.at(i); };
  switch (spec.family) {
    case Family::kComplete: return complete_graph(p(0));
    case Family::kCycle: return cycle_graph(p(0));
    case Family::kPath: return path_graph(p(0));
    case Family::kStar: return star_graph(p(0));
    case Family::kEmpty: return empty_graph(p(0));
    case Family::kDumbbell: return dumbbell_graph(p(0));
    case Family::kRook4x4: return rook4x4_graph();
    case Family::kShrikhande: return shrikhande_graph();
    case Family::kPaley25: return paley25_graph();
    case Family::kTriangular: return triangular_graph(p(0));
    case Family::kChang: return chang_graph(p(0));
  }
  throw Error("unhandled family");
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star_graph(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return Graph(n);
}

Graph dumbbell_graph(int n) {
  require(n >= 3, "dumbbell needs n >= 3");
  Graph k = complete_graph(n);
  Graph g = disjoint_union(k, k);
  return g.with_edge(0, n).with_edge(1, n + 1);
}

Edge dumbbell_edge(int n, DumbbellEdge which) {
  switch (which) {
    case DumbbellEdge::kBridge: return {0, n};
    case DumbbellEdge::kAttachmentPair: return {0, 1};
    case DumbbellEdge::kAttachmentInterior:
      require(n >= 3, "no interior vertex");
      return {0, 2};
    case DumbbellEdge::kInteriorPair:
      require(n >= 4, "interior edge needs n >= 4");
      return {2, 3};
  }
  throw Error("bad dumbbell edge class");
}

Graph rook4x4_graph() {
  std::vector<Edge> e;
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4) e.emplace_back(u, v);
  return Graph(16, e);
}

Graph shrikhande_graph() {
  const std::set<std::pair<int, int>> conn{{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<Edge> e;
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) {
      std::pair<int, int> d{((v / 4) - (u / 4) + 4) % 4, ((v % 4) - (u % 4) + 4) % 4};
      if (conn.count(d)) e.emplace_back(u, v);
    }
  return Graph(16, e);
}

Graph paley25_graph() {
  // GF(25) = GF(5)[a]/(a^2 - 2); element x + y a has index 5x + y.
  auto mul = [](int p, int q) {
    int x1 = p / 5, y1 = p % 5, x2 = q / 5, y2 = q % 5;
    int x = (x1 * x2 + 2 * y1 * y2) % 5;
    int y = (x1 * y2 + x2 * y1) % 5;
    return 5 * x + y;
  };
  auto sub = [](int p, int q) {
    return 5 * (((p / 5) - (q / 5) + 5) % 5) + (((p % 5) - (q % 5) + 5) % 5);
  };
  std::set<int> squares;
  for (int z = 1; z < 25; ++z) squares.insert(mul(z, z));
  std::vector<Edge> e;
  for (int u = 0; u < 25; ++u)
    for (int v = u + 1; v < 25; ++v)
      if (squares.count(sub(u, v))) e.emplace_back(u, v);
  return Graph(25, e);
}

Graph triangular_graph(int m) {
  require(m >= 2, "triangular graph needs m >= 2");
  return line_graph(complete_graph(m));
}

Graph chang_graph(int which) {
  // Switch T(8) on the K8-edges of a perfect matching, an 8-cycle, or C3 + C5.
  std::vector<Edge> sw;
  switch (which) {
    case 1: sw = {{0, 1}, {2, 3}, {4, 5}, {6, 7}}; break;
    case 2:
      for (int i = 0; i < 8; ++i) sw.emplace_back(i, (i + 1) % 8);
      break;
    case 3:
      sw = {{0, 1}, {1, 2}, {0, 2}};
      for (int i = 0; i < 5; ++i) sw.emplace_back(3 + i, 3 + (i + 1) % 5);
      break;
    default: throw Error("Chang graph index must be 1, 2 or 3");
  }
  Graph k8 = complete_graph(8);
  std::vector<int> subset;
  for (auto [u, v] : sw) subset.push_back(k8.edge_index(u, v));
  return seidel_switch(line_graph(k8), subset);
}

CfiPair cfi_pair(const Graph& base) {
  require(base.order() >= 2 && base.size() >= 1, "CFI base needs at least one edge");
  require(base.connected(), "CFI base must be connected");
  const int n = base.order();
  // Per base vertex: 2^(d-1) middle vertices, then a/b ports per incident edge.
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    int d = base.degree(v);
    require(d <= 20, "CFI gadget degree too large");
    offset[v + 1] = offset[v] + (1 << (d - 1)) + 2 * d;
  }
  auto port = [&](int v, int i, bool b) {
    int d = base.degree(v);
    return offset[v] + (1 << (d - 1)) + 2 * i + (b ? 1 : 0);
  };
  std::vector<Edge> gadget;
  for (int v = 0; v < n; ++v) {
    int d = base.degree(v);
    int mid = 0;
    for (int s = 0; s < (1 << d); ++s) {
      if (__builtin_popcount(s) % 2) continue;
      for (int i = 0; i < d; ++i) gadget.emplace_back(offset[v] + mid, port(v, i, !((s >> i) & 1)));
      ++mid;
    }
  }
  auto local = [&](int v, int w) {
    const auto& nb = base.neighbors(v);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };
  const Edge twist = base.edges().front();
  std::vector<Edge> plain = gadget, twisted = gadget;
  for (auto [u, v] : base.edges()) {
    int iu = local(u, v), iv = local(v, u);
    plain.emplace_back(port(u, iu, false), port(v, iv, false));
    plain.emplace_back(port(u, iu, true), port(v, iv, true));
    bool cross = Edge{u, v} == twist;
    twisted.emplace_back(port(u, iu, false), port(v, iv, cross));
    twisted.emplace_back(port(u, iu, true), port(v, iv, !cross));
  }
  return CfiPair{Graph(offset[n], plain), Graph(offset[n], twisted), twist};
}

}  // namespace graphforms
