#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graphforms/graph.hpp"
#include "graphforms/spectral.hpp"
#include "json.hpp"

namespace graphforms {

// sum over eigenvalues above cutoff * spectral radius of t_k / (lambda_k + u).
Eigen::MatrixXd tilde_green(const SpectralDecomposition& sd, double u, double cutoff = 1e-9);
Eigen::MatrixXd tilde_green(const Graph& g, double u, double cutoff = 1e-9);

struct DistanceOptions {
  double c = 1e-4;
  int samples = 0;               // 0 means |V|
  double zero_mode_cutoff = 1e-9;
  double tie_quantum = 1e-12;    // relative; entries closer than this tie at u_1
  double cospectral_tol = 1e-8;  // relative to spectral radius
};

struct DistanceReport {
  double value = 0;
  double lambda1 = 0;
  std::vector<double> u;              // u_1 .. u_S
  std::vector<double> contributions;  // per-sample sum of squared differences
  bool cospectral = false;
  bool disconnected_input = false;
  bool padded = false;
  std::string sort_rule = "primary-u1-lexicographic";

  nlohmann::json to_json() const;
};

DistanceReport distance(const Graph& g1, const Graph& g2, const DistanceOptions& opts = {});

// Adds isolated vertices so that g has n vertices.
Graph pad_isolated(const Graph& g, int n);

}  // namespace graphforms
