#include <cmath>

#include "graphforms/isometry.hpp"

namespace graphforms {

namespace {

mpz_class round_nearest(const mpq_class& x) {
  mpq_class shifted = x + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

class GramLll {
 public:
  GramLll(const IntMatrix& f, const mpq_class& delta)
      : n_(f.rows()), g_(f), t_(IntMatrix::identity(f.rows())), mu_(n_, std::vector<mpq_class>(n_)), b_(n_), delta_(delta) {}

  void run() {
    if (n_ == 0) return;
    int valid = 0;
    int k = 1;
    gso_row(0);
    valid = 1;
    while (k < n_) {
      for (int i = valid; i <= k; ++i) gso_row(i);
      valid = k + 1;
      for (int j = k - 1; j >= 0; --j) size_reduce(k, j);
      if (b_[k] >= (delta_ - mu_[k][k - 1] * mu_[k][k - 1]) * b_[k - 1]) {
        ++k;
      } else {
        swap_basis(k);
        valid = k - 1;
        k = std::max(k - 1, 1);
      }
    }
    for (int i = valid; i < n_; ++i) gso_row(i);
  }

  IntMatrix gram() const { return g_; }
  IntMatrix transform() const { return t_; }

 private:
  void gso_row(int i) {
    for (int j = 0; j < i; ++j) {
      mpq_class s = g_(i, j);
      for (int l = 0; l < j; ++l) s -= mu_[j][l] * mu_[i][l] * b_[l];
      mu_[i][j] = s / b_[j];
    }
    mpq_class s = g_(i, i);
    for (int l = 0; l < i; ++l) s -= mu_[i][l] * mu_[i][l] * b_[l];
    if (s <= 0) throw Error("form is not positive definite");
    b_[i] = s;
  }

  void size_reduce(int k, int j) {
    mpz_class q = round_nearest(mu_[k][j]);
    if (q == 0) return;
    // b_k <- b_k - q b_j
    g_(k, k) = g_(k, k) - 2 * q * g_(k, j) + q * q * g_(j, j);
    for (int l = 0; l < n_; ++l) {
      if (l == k) continue;
      g_(k, l) -= q * g_(j, l);
      g_(l, k) = g_(k, l);
    }
    for (int r = 0; r < n_; ++r) t_(r, k) -= q * t_(r, j);
    mu_[k][j] -= q;
    for (int l = 0; l < j; ++l) mu_[k][l] -= q * mu_[j][l];
  }

  void swap_basis(int k) {
    for (int l = 0; l < n_; ++l) std::swap(g_(k, l), g_(k - 1, l));
    for (int l = 0; l < n_; ++l) std::swap(g_(l, k), g_(l, k - 1));
    for (int r = 0; r < n_; ++r) std::swap(t_(r, k), t_(r, k - 1));
  }

  int n_;
  IntMatrix g_, t_;
  std::vector<std::vector<mpq_class>> mu_;
  std::vector<mpq_class> b_;
  mpq_class delta_;
};

}  // namespace

LllResult lll_reduce(const IntMatrix& f, const mpq_class& delta) {
  if (!f.symmetric()) throw Error("LLL needs a symmetric Gram matrix");
  if (delta <= mpq_class(1, 4) || delta >= 1) throw Error("LLL delta must lie in (1/4, 1)");
  GramLll lll(f, delta);
  lll.run();
  return LllResult{lll.gram(), lll.transform()};
}

bool is_positive_definite(const IntMatrix& f) {
  if (!f.symmetric()) return false;
  const int n = f.rows();
  // Leading principal minors via exact rational Cholesky-style elimination.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = f(i, j);
  for (int k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      mpq_class r = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= r * a[k][j];
    }
  }
  return true;
}

mpz_class quadratic_value(const IntMatrix& f, const IntVector& x) {
  mpz_class s = 0;
  const int n = f.rows();
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    mpz_class row = 0;
    for (int j = 0; j < n; ++j) row += f(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

std::vector<IntVector> short_vectors(const IntMatrix& f, const mpz_class& bound, long long max_vectors) {
  if (!is_positive_definite(f)) throw Error("short vectors need a positive definite form");
  const int n = f.rows();
  std::vector<IntVector> out;
  if (n == 0 || bound < 1) return out;
  // q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = f(i, j).get_d();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  const double c = bound.get_d() * (1 + 1e-9) + 1e-6;
  std::vector<long long> x(n, 0);
  std::vector<double> remaining(n + 1, 0.0), centre(n, 0.0);
  remaining[n] = c;
  // Depth-first over coordinates n-1 .. 0.
  auto centre_of = [&](int i) {
    double s = 0;
    for (int j = i + 1; j < n; ++j) s += q[i][j] * static_cast<double>(x[j]);
    return -s;
  };
  std::vector<long long> upper(n);
  int i = n - 1;
  auto start_level = [&](int lvl) {
    centre[lvl] = centre_of(lvl);
    double r = std::sqrt(std::max(0.0, remaining[lvl + 1] / q[lvl][lvl]));
    x[lvl] = static_cast<long long>(std::ceil(centre[lvl] - r - 1e-9));
    upper[lvl] = static_cast<long long>(std::floor(centre[lvl] + r + 1e-9));
  };
  start_level(i);
  while (true) {
    if (x[i] > upper[i]) {
      if (++i == n) break;
      ++x[i];
      continue;
    }
    double d = static_cast<double>(x[i]) - centre[i];
    double rem = remaining[i + 1] - q[i][i] * d * d;
    if (rem < -1e-9 * c) {
      ++x[i];
      continue;
    }
    if (i == 0) {
      bool zero = true;
      for (long long v : x) zero &= v == 0;
      if (!zero) {
        IntVector v(n);
        for (int k = 0; k < n; ++k) v[k] = static_cast<long>(x[k]);
        if (quadratic_value(f, v) <= bound) {
          if (static_cast<long long>(out.size()) >= max_vectors) throw BudgetExceeded("short-vector budget exhausted");
          out.push_back(std::move(v));
        }
      }
      ++x[0];
      continue;
    }
    remaining[i] = std::max(0.0, rem);
    --i;
    start_level(i);
  }
  return out;
}

}  // namespace graphforms
