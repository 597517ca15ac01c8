#include "graphforms/qform.hpp"

#include <set>

namespace graphforms {

namespace {

// Column operation on the pair (j, k): [col_j col_k] <- [col_j col_k] * [[a, b], [c, d]].
void combine_columns(IntMatrix& m, int j, int k, const mpz_class& a, const mpz_class& b,
                     const mpz_class& c, const mpz_class& d) {
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class x = m(i, j), y = m(i, k);
    m(i, j) = a * x + c * y;
    m(i, k) = b * x + d * y;
  }
}

// Unimodular U with F * U = [H | 0]; returns the number of nonzero columns.
int column_echelon(IntMatrix f, IntMatrix& u) {
  const int n = f.cols();
  u = IntMatrix::identity(n);
  int k = 0;
  // Euclid on row i: the smallest nonzero entry becomes the pivot and the other
  // columns are reduced modulo it, which keeps U far smaller than gcdext steps.
  for (int i = 0; i < f.rows() && k < n; ++i) {
    while (true) {
      int piv = -1;
      for (int j = k; j < n; ++j)
        if (f(i, j) != 0 && (piv < 0 || abs(f(i, j)) < abs(f(i, piv)))) piv = j;
      if (piv < 0) break;
      if (piv != k) {
        combine_columns(f, k, piv, 0, 1, 1, 0);
        combine_columns(u, k, piv, 0, 1, 1, 0);
      }
      bool done = true;
      for (int j = k + 1; j < n; ++j) {
        if (f(i, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), f(i, j).get_mpz_t(), f(i, k).get_mpz_t());
        combine_columns(f, k, j, 1, -q, 0, 1);
        combine_columns(u, k, j, 1, -q, 0, 1);
        done = done && f(i, j) == 0;
      }
      if (done) break;
    }
    if (f(i, k) != 0) ++k;
  }
  return k;
}

// Tries to pick coordinates S with det(K_S) = +-1, scanning from the last coordinate.
bool unit_vector_complement(IntMatrix kernel, std::vector<int>& kept) {
  const int n = kernel.rows(), r = kernel.cols();
  std::vector<char> used(r, 0), in_s(n, 0);
  int found = 0;
  for (int i = n - 1; i >= 0 && found < r; --i) {
    int c = -1;
    for (int j = 0; j < r; ++j)
      if (!used[j] && abs(kernel(i, j)) == 1) {
        c = j;
        break;
      }
    if (c < 0) continue;
    for (int j = 0; j < r; ++j) {
      if (used[j] || j == c || kernel(i, j) == 0) continue;
      mpz_class f = kernel(i, j) * kernel(i, c);
      for (int t = 0; t < n; ++t) kernel(t, j) -= f * kernel(t, c);
    }
    used[c] = 1;
    in_s[i] = 1;
    ++found;
  }
  if (found < r) return false;
  kept.clear();
  for (int i = 0; i < n; ++i)
    if (!in_s[i]) kept.push_back(i);
  return true;
}

}  // namespace

SaturationQuotient saturation_quotient(const IntMatrix& f) {
  if (!f.symmetric()) throw Error("form must be a symmetric square matrix");
  const int n = f.rows();
  IntMatrix u;
  const int rank = column_echelon(f, u);
  SaturationQuotient q;
  q.corank = n - rank;
  std::vector<int> all(n), head, tail;
  for (int i = 0; i < n; ++i) {
    all[i] = i;
    (i < rank ? head : tail).push_back(i);
  }
  q.kernel = u.submatrix(all, tail);
  std::vector<int> kept;
  if (unit_vector_complement(q.kernel, kept)) {
    q.standard_complement = true;
    q.complement = IntMatrix(n, static_cast<int>(kept.size()));
    for (size_t j = 0; j < kept.size(); ++j) q.complement(kept[j], static_cast<int>(j)) = 1;
  } else {
    q.complement = u.submatrix(all, head);
  }
  q.gram = q.complement.transpose() * f * q.complement;
  return q;
}

}  // namespace graphforms
