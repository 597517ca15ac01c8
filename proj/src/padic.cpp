#include <algorithm>
#include <array>
#include <sstream>

#include "graphforms/factor.hpp"
#include "graphforms/qform.hpp"

namespace graphforms {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw Error("element not invertible");
  return r;
}

mpz_class power(const mpz_class& p, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

using ModMatrix = std::vector<std::vector<mpz_class>>;

// Reduced row echelon form over GF(p) in place; returns pivot columns.
std::vector<int> rref_mod(ModMatrix& m, const mpz_class& p) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    mpz_class inv = inverse_mod(m[r][c], p);
    for (auto& x : m[r]) x = mod(x * inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpz_class f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Echelonised basis of the kernel of a (symmetric) matrix over GF(p).
ModMatrix kernel_basis_mod(const IntMatrix& a, const mpz_class& p) {
  const int n = a.rows();
  ModMatrix m(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = mod(a(i, j), p);
  auto pivots = rref_mod(m, p);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  ModMatrix basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpz_class> v(n);
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-m[r][f], p);
    basis.push_back(std::move(v));
  }
  rref_mod(basis, p);
  return basis;
}

// Inverse of F reduced modulo `modulus`, entries in [0, modulus).
IntMatrix inverse_mod_matrix(const IntMatrix& f, const mpz_class& modulus) {
  const int n = f.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = f(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("singular block in Jordan splitting");
    std::swap(a[piv], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class t = a[i][c];
      for (int j = c; j < 2 * n; ++j) a[i][j] -= t * a[c][j];
    }
  }
  IntMatrix u(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const mpq_class& q = a[i][n + j];
      u(i, j) = mod(q.get_num() * inverse_mod(q.get_den(), modulus), modulus);
    }
  return u;
}

int min_valuation(const IntMatrix& a, const mpz_class& p) {
  int best = -1;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) {
        int v = valuation(a(i, j), p);
        if (best < 0 || v < best) best = v;
      }
  if (best < 0) throw Error("degenerate form: zero block in Jordan splitting");
  return best;
}

// ---- oddity of an odd unimodular 2-adic form, via diagonalisation mod 8 ----

using Mod8 = std::vector<std::vector<int>>;

int first_odd_diagonal(const Mod8& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i][i] % 2 == 1) return static_cast<int>(i);
  return -1;
}

Mod8 congruence_mod8(const Mod8& c, const Mod8& a) {
  const size_t r = c.size(), n = a.size();
  Mod8 ca(r, std::vector<int>(n, 0)), out(r, std::vector<int>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < n; ++k)
      if (c[i][k])
        for (size_t j = 0; j < n; ++j) ca[i][j] = (ca[i][j] + c[i][k] * a[k][j]) % 8;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      int s = 0;
      for (size_t k = 0; k < n; ++k) s += ca[i][k] * c[j][k];
      out[i][j] = ((s % 8) + 8) % 8;
    }
  return out;
}

// Complement of e_i projected orthogonally, using u^-1 = u mod 8.
Mod8 split_complement(const Mod8& a, int i, int u) {
  const int n = static_cast<int>(a.size());
  Mod8 c(n - 1, std::vector<int>(n, 0));
  for (int j = 0; j < n - 1; ++j) {
    int src = j < i ? j : j + 1;
    c[j][src] = 1;
    c[j][i] = ((-a[src][i] * u) % 8 + 8) % 8;
  }
  return congruence_mod8(c, a);
}

std::pair<int, Mod8> split_odd(Mod8 a) {
  const int n = static_cast<int>(a.size());
  if (n == 1) return {a[0][0], Mod8{}};
  int i = first_odd_diagonal(a);
  int u = a[i][i];
  Mod8 b = split_complement(a, i, u);
  if (first_odd_diagonal(b) < 0) {
    // The complement came out even; move to a basis vector whose complement is odd.
    Mod8 t(n, std::vector<int>(n, 0));
    for (int k = 0; k < n; ++k) t[k][k] = 1;
    if (i == 0) {
      t[1][0] = ((1 - a[1][0] * u) % 8 + 8) % 8;
      i = 1;
    } else {
      t[0][i] = ((1 - a[0][i] * u) % 8 + 8) % 8;
      i = 0;
    }
    a = congruence_mod8(t, a);
    u = a[i][i];
    b = split_complement(a, i, u);
    if (first_odd_diagonal(b) < 0) throw Error("2-adic splitting left an even complement");
  }
  return {u, b};
}

int trace_diag_mod8(Mod8 a) {
  int tr = 0;
  while (!a.empty()) {
    auto [u, rest] = split_odd(std::move(a));
    tr = (tr + u) % 8;
    a = std::move(rest);
  }
  return tr;
}

PadicConstituent describe_block(const IntMatrix& f, const mpz_class& p, int scale) {
  PadicConstituent c;
  c.scale = scale;
  c.rank = f.rows();
  mpz_class d = exact_det(f);
  if (p == 2) {
    c.det = static_cast<int>(mod(d, 8).get_si());
    Mod8 a8(c.rank, std::vector<int>(c.rank));
    bool even = true;
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) a8[i][j] = static_cast<int>(mod(f(i, j), 8).get_si());
    for (int i = 0; i < c.rank; ++i)
      if (a8[i][i] % 2) even = false;
    c.type = even ? 0 : 1;
    c.oddity = even ? 0 : trace_diag_mod8(a8);
  } else {
    c.det = legendre_symbol(mod(d, p), p);
  }
  return c;
}

void split_recursive(IntMatrix a, const mpz_class& p, int val, int offset,
                     std::vector<PadicConstituent>& out, std::vector<JordanBlock>* blocks) {
  const int n = a.rows();
  const int m0 = min_valuation(a, p);
  const mpz_class q = power(p, m0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), q.get_mpz_t());

  ModMatrix kernel = kernel_basis_mod(a, p);
  if (kernel.empty()) {
    out.push_back(describe_block(a, p, offset + m0));
    if (blocks) blocks->push_back(JordanBlock{offset + m0, a});
    return;
  }
  const int r = static_cast<int>(kernel.size());
  std::vector<char> pivot(n, 0);
  for (const auto& row : kernel)
    for (int j = 0; j < n; ++j)
      if (row[j] != 0) {
        pivot[j] = 1;
        break;
      }
  std::vector<int> rest;
  for (int j = 0; j < n; ++j)
    if (!pivot[j]) rest.push_back(j);

  IntMatrix f = a.submatrix(rest, rest);
  out.push_back(describe_block(f, p, offset + m0));
  if (blocks) blocks->push_back(JordanBlock{offset + m0, f});

  IntMatrix u = inverse_mod_matrix(f, power(p, val + 3));
  std::vector<int> all(n);
  for (int j = 0; j < n; ++j) all[j] = j;
  IntMatrix x = a.submatrix(rest, all);
  IntMatrix b(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = kernel[i][j];
  IntMatrix reduced = b * (a - x.transpose() * u * x) * b.transpose();
  split_recursive(std::move(reduced), p, val, offset + m0, out, blocks);
}

void check_input(const IntMatrix& f, const mpz_class& p, mpz_class* det) {
  if (!f.symmetric()) throw Error("form must be a symmetric square matrix");
  if (p < 2 || !is_probable_prime(p)) throw Error("p must be prime");
  *det = exact_det(f);
  if (*det == 0) throw Error("form is degenerate");
}

// Blocks of type 1 with consecutive scales.
std::vector<std::vector<int>> compartments(const std::vector<PadicConstituent>& s) {
  std::vector<std::vector<int>> out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i].type == 1) {
      int v = s[i].scale;
      std::vector<int> c;
      while (i < s.size() && s[i].type == 1 && s[i].scale == v) {
        c.push_back(static_cast<int>(i));
        ++i;
        ++v;
      }
      out.push_back(c);
    } else {
      ++i;
    }
  }
  return out;
}

// A train breaks wherever two even (possibly zero-dimensional) forms are adjacent.
std::vector<std::vector<int>> trains(const std::vector<PadicConstituent>& s) {
  std::vector<std::vector<int>> out;
  if (s.empty()) return out;
  std::vector<int> cur{0};
  for (size_t i = 1; i < s.size(); ++i) {
    const auto& prev = s[i - 1];
    const auto& now = s[i];
    int gap = now.scale - prev.scale;
    bool split = gap > 2 || (gap == 2 && now.type * prev.type == 0) || (prev.type == 0 && now.type == 0);
    if (split) {
      out.push_back(cur);
      cur = {static_cast<int>(i)};
    } else {
      cur.push_back(static_cast<int>(i));
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<JordanBlock> jordan_decomposition(const IntMatrix& f, const mpz_class& p) {
  mpz_class det;
  check_input(f, p, &det);
  std::vector<PadicConstituent> sym;
  std::vector<JordanBlock> blocks;
  if (f.rows() > 0) split_recursive(f, p, valuation(det, p), 0, sym, &blocks);
  return blocks;
}

PadicSymbol padic_symbol(const IntMatrix& f, const mpz_class& p) {
  mpz_class det;
  check_input(f, p, &det);
  PadicSymbol s;
  s.p = p;
  if (f.rows() > 0) split_recursive(f, p, valuation(det, p), 0, s.constituents, nullptr);
  return s;
}

std::vector<PadicSymbol> genus_symbol_list(const IntMatrix& f) {
  mpz_class det;
  check_input(f, 2, &det);
  auto fac = prime_factorization(2 * det);
  if (!fac.complete()) throw Error("could not factor the determinant within budget");
  std::vector<PadicSymbol> out;
  for (const auto& p : fac.distinct_primes()) out.push_back(padic_symbol(f, p));
  return out;
}

std::string PadicSymbol::to_list_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < constituents.size(); ++i) {
    const auto& c = constituents[i];
    out << (i ? ", [" : "[") << c.scale << ", " << c.rank << ", " << c.det;
    if (p == 2) out << ", " << c.type << ", " << c.oddity;
    out << ']';
  }
  return out.str();
}

std::string PadicSymbol::to_compact_string() const {
  std::ostringstream out;
  const PadicSymbol shown = p == 2 ? canonical() : *this;
  for (size_t i = 0; i < shown.constituents.size(); ++i) {
    const auto& c = shown.constituents[i];
    out << (i ? " " : "") << power(p, c.scale).get_str();
    if (p == 2) {
      out << "^{" << (c.det > 0 ? '+' : '-') << c.rank << "}_";
      if (c.type == 0) {
        out << "{II}";
      } else {
        out << '{' << c.oddity << '}';
      }
    } else {
      out << "^{" << c.rank << (c.det > 0 ? '+' : '-') << '}';
    }
  }
  return out.str();
}

PadicSymbol PadicSymbol::canonical() const {
  if (p != 2) return *this;
  PadicSymbol out = *this;
  auto& s = out.constituents;
  for (auto& c : s) c.det = (c.det == 1 || c.det == 7) ? 1 : -1;
  auto comps = compartments(s);
  for (const auto& comp : comps) {
    int total = 0;
    for (int i : comp) {
      total += s[i].oddity;
      s[i].oddity = 0;
    }
    s[comp.front()].oddity = total % 8;
  }
  for (const auto& train : trains(s)) {
    for (size_t k = train.size() - 1; k >= 1; --k) {
      int t1 = train[k];
      if (s[t1].det != -1) continue;
      s[t1].det = 1;
      s[t1 - 1].det = -s[t1 - 1].det;
      for (const auto& comp : comps) {
        bool hit = std::find(comp.begin(), comp.end(), t1 - 1) != comp.end() ||
                   std::find(comp.begin(), comp.end(), t1) != comp.end();
        if (hit) s[comp.front()].oddity = (s[comp.front()].oddity + 4) % 8;
      }
    }
  }
  return out;
}

LocalEquivalence local_equivalence(const IntMatrix& f1, const IntMatrix& f2) {
  LocalEquivalence r;
  if (f1.rows() != f2.rows()) {
    r.reason = "dimension";
    return r;
  }
  mpz_class d1, d2;
  check_input(f1, 2, &d1);
  check_input(f2, 2, &d2);
  if (abs(d1) != abs(d2)) {
    r.reason = "determinant";
    return r;
  }
  auto fac = prime_factorization(2 * d1);
  if (!fac.complete()) throw Error("could not factor the determinant within budget");
  for (const auto& p : fac.distinct_primes()) {
    if (!padic_symbol(f1, p).equivalent(padic_symbol(f2, p))) {
      r.reason = "p-adic symbol";
      r.witness_prime = p;
      return r;
    }
  }
  r.equivalent = true;
  return r;
}

bool is_locally_equivalent(const IntMatrix& f1, const IntMatrix& f2) { return local_equivalence(f1, f2).equivalent; }

}  // namespace graphforms
