#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "graphforms/graph.hpp"
#include "json.hpp"

namespace graphforms {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  mpz_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix scaled(const mpz_class& c) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool symmetric() const;
  bool is_zero() const;

  IntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  std::vector<std::vector<long long>> to_ll() const;  // throws if an entry overflows
  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

nlohmann::json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);

// Integer polynomial, coefficients in ascending degree order; no trailing zeros.
struct IntPolynomial {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  mpz_class operator()(const mpz_class& x) const;
  bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
  std::string to_string(const std::string& var = "u") const;
  void trim();
};

// f(A) + q*J by Horner's rule.
IntMatrix eval_matrix_poly(const IntMatrix& a, const IntPolynomial& f, const mpz_class& q = 0);

// Fraction-free Gaussian elimination.
mpz_class exact_det(const IntMatrix& m);
int exact_rank(const IntMatrix& m);

// (-1)^(x+y) * cofactor_{y,x}(M + uI) as a polynomial in u.
IntPolynomial cofactor_polynomial(const IntMatrix& m, int y, int x);
// det(uI - M).
IntPolynomial characteristic_polynomial(const IntMatrix& m);

// Exact inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace graphforms
