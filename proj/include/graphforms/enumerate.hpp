#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "graphforms/graph.hpp"

namespace graphforms {

// Isomorphism-class representatives, bucketed by invariant_hash.
class IsoClassSet {
 public:
  // Adds g unless an isomorphic graph is present; returns true if added.
  bool insert(const Graph& g);
  const std::vector<Graph>& graphs() const { return graphs_; }

 private:
  std::vector<Graph> graphs_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

// 3-regular graphs on n vertices up to isomorphism; n even, n <= 8.
std::vector<Graph> enumerate_cubic(int n);

// Graphs obtained from K_n by deleting m edges, up to isomorphism; n <= 7.
// Disconnected results are included.
std::vector<Graph> enumerate_edge_deletions(int n, int m);

// Trees on n vertices up to isomorphism; 1 <= n <= 10.
std::vector<Graph> enumerate_trees(int n);

}  // namespace graphforms
