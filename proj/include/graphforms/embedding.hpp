#pragma once

#include <utility>
#include <vector>

#include "graphforms/graph.hpp"
#include "json.hpp"

namespace graphforms {

// Darts: edge i of graph.edges() = (u, v) with u < v gives dart 2i leaving u
// and dart 2i+1 leaving v. rotation[v] lists the darts leaving v in cyclic order.
struct RotationSystem {
  Graph graph;
  std::vector<std::vector<int>> rotation;

  static RotationSystem from_neighbor_order(const Graph& g, const std::vector<std::vector<int>>& order);
  // Neighbours sorted by angle around each vertex of a straight-line drawing.
  static RotationSystem from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy);

  int tail(int dart) const;
  int head(int dart) const;
  void validate() const;

  nlohmann::json to_json() const;
  static RotationSystem from_json(const nlohmann::json& j);
};

struct EmbeddingReport {
  std::vector<std::vector<int>> faces;  // dart cycles
  std::vector<int> face_of_dart;
  int genus = 0;
  MultiGraph dual;

  nlohmann::json to_json() const;
};

EmbeddingReport trace_faces(const RotationSystem& r);

// Adds a path of `length` new edges between the endpoints of edge {x, y}, drawn
// inside the face traversed by dart x -> y.
RotationSystem glue_cycle_along_edge(const RotationSystem& r, int x, int y, int length);

bool multigraph_isomorphic(const MultiGraph& a, const MultiGraph& b);
bool dual_isomorphic(const EmbeddingReport& a, const EmbeddingReport& b);

}  // namespace graphforms
