#include "graphforms/int_matrix.hpp"

#include <sstream>

namespace graphforms {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference dimension mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

IntMatrix IntMatrix::scaled(const mpz_class& c) const {
  IntMatrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  IntMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
  return r;
}

std::vector<std::vector<long long>> IntMatrix::to_ll() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (!x.fits_slong_p()) throw Error("matrix entry does not fit in 64 bits");
      out[i][j] = x.get_si();
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

nlohmann::json to_json(const IntMatrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) {
      const auto& x = m(i, c);
      if (x.fits_slong_p()) {
        row.push_back(x.get_si());
      } else {
        row.push_back(x.get_str());
      }
    }
    j.push_back(row);
  }
  return j;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error("matrix json must be an array of rows");
  int r = static_cast<int>(j.size());
  int c = r ? static_cast<int>(j[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) throw Error("ragged matrix json");
    for (int k = 0; k < c; ++k) {
      const auto& x = j[i][k];
      if (x.is_number_integer()) {
        m(i, k) = static_cast<long>(x.get<long long>());
      } else if (x.is_string()) {
        m(i, k) = mpz_class(x.get<std::string>());
      } else {
        throw Error("matrix entries must be integers");
      }
    }
  }
  return m;
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix m(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    m(u, v) = m(v, u) = -1;
    m(u, u) += 1;
    m(v, v) += 1;
  }
  return m;
}

mpz_class IntPolynomial::operator()(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

void IntPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k > 0) out << var;
    if (k > 1) out << '^' << k;
    first = false;
  }
  return out.str();
}

IntMatrix eval_matrix_poly(const IntMatrix& a, const IntPolynomial& f, const mpz_class& q) {
  if (!a.square()) throw Error("matrix polynomial needs a square matrix");
  const int n = a.rows();
  IntMatrix r(n, n);
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    r = r * a;
    for (int i = 0; i < n; ++i) r(i, i) += *it;
  }
  if (q != 0)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) += q;
  return r;
}

namespace {

// Bareiss elimination in place; returns the determinant and the rank.
mpz_class bareiss(IntMatrix m, int* rank_out) {
  const int rows = m.rows(), cols = m.cols();
  mpz_class prev = 1;
  int sign = 1, r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (rank_out) *rank_out = r;
  if (rows != cols || r < rows) return 0;
  return sign * prev;
}

// Interpolates values at x = 0..k-1 into an integer polynomial.
IntPolynomial interpolate(const std::vector<mpz_class>& values) {
  const int k = static_cast<int>(values.size());
  // Newton forward differences give coefficients in the binomial basis.
  std::vector<mpz_class> diff = values;
  std::vector<mpz_class> newton(k);
  for (int i = 0; i < k; ++i) {
    newton[i] = diff[0];
    for (int j = 0; j + 1 < k - i; ++j) diff[j] = diff[j + 1] - diff[j];
  }
  // sum newton[i] * C(x, i); expand C(x, i) = x(x-1)...(x-i+1)/i!
  std::vector<mpq_class> poly(k);
  std::vector<mpz_class> falling{1};  // coefficients of x(x-1)...(x-i+1)
  mpz_class fact = 1;
  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      fact *= i;
      std::vector<mpz_class> next(falling.size() + 1);
      for (size_t d = 0; d < falling.size(); ++d) {
        next[d + 1] += falling[d];
        next[d] -= falling[d] * (i - 1);
      }
      falling.swap(next);
    }
    for (size_t d = 0; d < falling.size(); ++d) poly[d] += mpq_class(newton[i] * falling[d], fact);
  }
  IntPolynomial out;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw Error("interpolated polynomial is not integral");
    out.coeffs.push_back(c.get_num());
  }
  out.trim();
  return out;
}

}  // namespace

mpz_class exact_det(const IntMatrix& m) {
  if (!m.square()) throw Error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  return bareiss(m, nullptr);
}

int exact_rank(const IntMatrix& m) {
  int r = 0;
  bareiss(m, &r);
  return r;
}

IntPolynomial cofactor_polynomial(const IntMatrix& m, int y, int x) {
  if (!m.square()) throw Error("cofactor of a non-square matrix");
  const int n = m.rows();
  if (x < 0 || y < 0 || x >= n || y >= n) throw Error("cofactor index out of range");
  std::vector<int> rows, cols;
  for (int i = 0; i < n; ++i) {
    if (i != y) rows.push_back(i);
    if (i != x) cols.push_back(i);
  }
  std::vector<mpz_class> values;
  for (int u = 0; u < n; ++u) {
    IntMatrix shifted = m;
    for (int i = 0; i < n; ++i) shifted(i, i) += u;
    mpz_class d = exact_det(shifted.submatrix(rows, cols));
    values.push_back((x + y) % 2 ? mpz_class(-d) : d);
  }
  return interpolate(values);
}

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  if (!m.square()) throw Error("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  std::vector<mpz_class> values;
  for (int u = 0; u <= n; ++u) {
    IntMatrix shifted = m.scaled(-1);
    for (int i = 0; i < n; ++i) shifted(i, i) += u;
    values.push_back(exact_det(shifted));
  }
  return interpolate(values);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (!u.square()) throw Error("inverse of a non-square matrix");
  const int n = u.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = u(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("matrix is singular");
    std::swap(a[piv], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a[i][n + j].get_den() != 1) throw Error("matrix is not unimodular");
      r(i, j) = a[i][n + j].get_num();
    }
  return r;
}

}  // namespace graphforms
