#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graphforms/graph.hpp"
#include "json.hpp"

namespace graphforms {

Eigen::MatrixXd laplacian_real(const Graph& g);

// Distinct eigenvalues of a real symmetric matrix with their eigenspaces.
class SpectralDecomposition {
 public:
  SpectralDecomposition() = default;
  // Eigenvalues closer than tol * max(1, spectral radius) are grouped.
  SpectralDecomposition(const Eigen::MatrixXd& m, double tol = 1e-8);
  static SpectralDecomposition of_laplacian(const Graph& g, double tol = 1e-8);

  int dimension() const { return static_cast<int>(vectors_.rows()); }
  int distinct_count() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& eigenvalues() const { return values_; }  // ascending
  const std::vector<int>& multiplicities() const { return mult_; }
  double tolerance() const { return tol_; }
  double spectral_radius() const { return radius_; }

  // t_k = sum of phi phi^T over an orthonormal basis of the k-th eigenspace.
  Eigen::MatrixXd projector(int k) const;
  // Orthonormal eigenvectors of eigenspace k, one per column.
  Eigen::MatrixXd eigenspace(int k) const;
  // All eigenvectors, columns ordered by ascending eigenvalue.
  const Eigen::MatrixXd& eigenvectors() const { return vectors_; }
  const Eigen::VectorXd& raw_eigenvalues() const { return raw_; }

  nlohmann::json to_json(bool with_projectors = false) const;

 private:
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd raw_;
  std::vector<double> values_;
  std::vector<int> mult_;
  std::vector<int> start_;
  double tol_ = 1e-8;
  double radius_ = 0;
};

// (M + uI)^-1 for u > 0; zero modes are handled through the component indicators.
Eigen::MatrixXd green(const Graph& g, double u);

// Sherman-Morrison update of a Green's function for deleting edge {x1, x2}.
Eigen::MatrixXd green_after_edge_deletion(const Eigen::MatrixXd& green, int x1, int x2);

// sum_k t_k (lambda_k + u)^alpha. Requires lambda_k + u > 0 unless alpha >= 0.
Eigen::MatrixXd fractional_power(const Graph& g, double u, double alpha);

struct STRecord {
  std::vector<double> t;  // (t_0(x,y), ..., t_m(x,y))
  int multiplicity = 0;
};

struct STInvariant {
  std::vector<double> eigenvalues;
  std::vector<STRecord> records;  // canonically ordered
  double quantum = 1e-9;

  long long total_multiplicity() const;
  nlohmann::json to_json() const;
};

STInvariant st_invariant(const Graph& g, double quantum = 1e-9, double group_tol = 1e-8);
bool st_equal(const STInvariant& a, const STInvariant& b, double tol = 1e-6);

}  // namespace graphforms
