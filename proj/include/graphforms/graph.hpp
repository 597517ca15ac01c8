#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphforms {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws Error on self-loops, repeated edges or out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  // Index of edge {u, v} in edges(), or -1.
  int edge_index(int u, int v) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  Graph without_edge(int u, int v) const;
  Graph with_edge(int u, int v) const;
  Graph complement() const;
  Graph relabeled(const std::vector<int>& perm) const;  // vertex v -> perm[v]
  bool connected() const;
  std::vector<int> component_ids(int* count = nullptr) const;

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

// Undirected multigraph; loops allowed. Used for face duals.
struct MultiGraph {
  int n = 0;
  std::vector<Edge> edges;
  // mult[u][v] with loops counted once on the diagonal.
  std::vector<std::vector<int>> multiplicity_matrix() const;
};

// ---- named families ----

enum class Family {
  kComplete,
  kCycle,
  kPath,
  kStar,
  kDumbbell,
  kRook4x4,
  kShrikhande,
  kPaley25,
  kTriangular,
  kChang,
  kEmpty,
};

struct FamilySpec {
  Family family = Family::kComplete;
  std::vector<int> params;

  // "complete:5", "dumbbell:10", "triangular:8", "chang:2", "rook4x4" ...
  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

Graph make_graph(const FamilySpec& spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);  // n vertices, centre 0
Graph empty_graph(int n);
Graph rook4x4_graph();
Graph shrikhande_graph();
Graph paley25_graph();
Graph triangular_graph(int m);  // line graph of K_m
Graph chang_graph(int which);   // which in {1,2,3}

// Two K_n on 0..n-1 and n..2n-1 joined by bridges 0-n and 1-(n+1).
Graph dumbbell_graph(int n);
enum class DumbbellEdge { kBridge = 1, kAttachmentPair = 2, kAttachmentInterior = 3, kInteriorPair = 4 };
Edge dumbbell_edge(int n, DumbbellEdge which);

Graph line_graph(const Graph& g);
Graph seidel_switch(const Graph& g, const std::vector<int>& subset);
Graph disjoint_union(const Graph& a, const Graph& b);

struct CfiPair {
  Graph untwisted;
  Graph twisted;
  Edge twist_edge;  // base edge whose port wiring is crossed
};
CfiPair cfi_pair(const Graph& base);

// Identify vertex x of g1 with vertex y of g2; g2's vertices follow g1's.
Graph wedge_sum(const Graph& g1, int x, const Graph& g2, int y);
// Disjoint union plus the single edge x - (y + |g1|).
Graph bridge_join(const Graph& g1, int x, const Graph& g2, int y);

struct Block {
  Graph graph;
  std::vector<int> vertices;  // original ids, block vertex i -> vertices[i]
};
std::vector<Block> block_decomposition(const Graph& g);
std::vector<Graph> simple_components(const Graph& g);
std::vector<int> cut_vertices(const Graph& g);

// Backtracking search; returns a mapping g1 -> g2 if isomorphic.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);
// Capped at 10 vertices.
bool brute_force_isomorphic(const Graph& g1, const Graph& g2);

// Cheap isomorphism-invariant hash (degree sequence, triangle counts, ...).
std::uint64_t invariant_hash(const Graph& g);

}  // namespace graphforms
