#include <algorithm>
#include <chrono>
#include <map>

#include "graphforms/isometry.hpp"

namespace graphforms {

std::string to_string(IsometryVerdict v) {
  switch (v) {
    case IsometryVerdict::kIsometric:
      return "isometric";
    case IsometryVerdict::kNotIsometric:
      return "not_isometric";
    case IsometryVerdict::kExhausted:
      return "exhausted";
  }
  return "unknown";
}

nlohmann::json IsometryResult::to_json() const {
  nlohmann::json j;
  j["verdict"] = to_string(verdict);
  j["witness"] = witness ? graphforms::to_json(*witness) : nlohmann::json(nullptr);
  j["separating_invariant"] = separating_invariant;
  j["nodes"] = nodes;
  j["vectors"] = vectors;
  j["seconds"] = seconds;
  j["budget_hit"] = budget_hit;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

std::map<mpz_class, long long> norm_counts(const IntMatrix& f, const std::vector<IntVector>& vs) {
  std::map<mpz_class, long long> out;
  for (const auto& v : vs) ++out[quadratic_value(f, v)];
  return out;
}

// Assigns images in L1 to the basis vectors of L2 so that all inner products agree.
class Matcher {
 public:
  Matcher(const IntMatrix& g1, const std::vector<IntVector>& s1, const IntMatrix& g2, const IsometryBudget& budget,
          Clock::time_point start)
      : n_(g2.rows()), budget_(budget), start_(start) {
    auto g1ll = g1.to_ll();
    g2_ = g2.to_ll();
    vec_.reserve(s1.size());
    gv_.reserve(s1.size());
    for (const auto& v : s1) {
      std::vector<long long> x(n_);
      for (int i = 0; i < n_; ++i) {
        if (!v[i].fits_slong_p()) throw Error("short vector coordinate overflow");
        x[i] = v[i].get_si();
      }
      std::vector<long long> gx(n_, 0);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) gx[i] += g1ll[i][j] * x[j];
      norm_.push_back(dot(gx, x));
      vec_.push_back(std::move(x));
      gv_.push_back(std::move(gx));
    }
  }

  // Returns true on success; `image` then holds indices into the vector list.
  bool run(std::vector<int>& image) {
    std::vector<std::vector<int>> domain(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < static_cast<int>(vec_.size()); ++k)
        if (norm_[k] == g2_[i][i]) domain[i].push_back(k);
    assign_.assign(n_, -1);
    first_ = true;
    bool ok = search(domain);
    image = assign_;
    return ok;
  }

  long long nodes() const { return nodes_; }
  std::string budget_hit() const { return budget_hit_; }
  const std::vector<long long>& vector_at(int k) const { return vec_[k]; }

 private:
  static long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  bool positive_leading(int k) const {
    for (long long c : vec_[k])
      if (c != 0) return c > 0;
    return false;
  }

  bool search(std::vector<std::vector<int>>& domain) {
    int pick = -1;
    for (int i = 0; i < n_; ++i)
      if (assign_[i] < 0 && (pick < 0 || domain[i].size() < domain[pick].size())) pick = i;
    if (pick < 0) return true;
    // -1 is an isometry, so the first image can be taken with positive leading coordinate.
    bool halve = first_;
    first_ = false;
    for (int k : domain[pick]) {
      if (halve && !positive_leading(k)) continue;
      if (++nodes_ > budget_.max_nodes) {
        budget_hit_ = "nodes";
        throw BudgetExceeded("node budget exhausted");
      }
      if ((nodes_ & 1023) == 0 &&
          std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds) {
        budget_hit_ = "seconds";
        throw BudgetExceeded("time budget exhausted");
      }
      std::vector<std::vector<int>> next(n_);
      bool dead = false;
      for (int j = 0; j < n_ && !dead; ++j) {
        if (assign_[j] >= 0 || j == pick) continue;
        for (int w : domain[j])
          if (w != k && dot(gv_[k], vec_[w]) == g2_[pick][j]) next[j].push_back(w);
        dead = next[j].empty();
      }
      if (dead) continue;
      assign_[pick] = k;
      if (search(next)) return true;
      assign_[pick] = -1;
    }
    return false;
  }

  int n_;
  IsometryBudget budget_;
  Clock::time_point start_;
  std::vector<std::vector<long long>> g2_;
  std::vector<std::vector<long long>> vec_, gv_;
  std::vector<long long> norm_;
  std::vector<int> assign_;
  bool first_ = true;
  long long nodes_ = 0;
  std::string budget_hit_;
};

IsometryResult finish(IsometryResult r, Clock::time_point start) {
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace

IsometryResult is_isometric(const IntMatrix& f1, const IntMatrix& f2, const IsometryBudget& budget) {
  const auto start = Clock::now();
  IsometryResult r;
  if (!f1.square() || !f2.square() || !f1.symmetric() || !f2.symmetric()) throw Error("isometry needs symmetric forms");
  if (f1.rows() != f2.rows()) {
    r.verdict = IsometryVerdict::kNotIsometric;
    r.separating_invariant = "rank";
    return finish(r, start);
  }
  const int n = f1.rows();
  if (n == 0) {
    r.verdict = IsometryVerdict::kIsometric;
    r.witness = IntMatrix(0, 0);
    return finish(r, start);
  }
  if (!is_positive_definite(f1) || !is_positive_definite(f2)) throw Error("isometry search needs positive definite forms");
  if (exact_det(f1) != exact_det(f2)) {
    r.verdict = IsometryVerdict::kNotIsometric;
    r.separating_invariant = "determinant";
    return finish(r, start);
  }
  auto local = local_equivalence(f1, f2);
  if (!local.equivalent) {
    r.verdict = IsometryVerdict::kNotIsometric;
    r.separating_invariant = "genus: " + local.reason;
    return finish(r, start);
  }

  auto red1 = lll_reduce(f1);
  auto red2 = lll_reduce(f2);
  const IntMatrix& g1 = red1.gram;
  const IntMatrix& g2 = red2.gram;
  mpz_class bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max({bound, g1(i, i), g2(i, i)});

  try {
    auto s1 = short_vectors(g1, bound, budget.max_vectors);
    auto s2 = short_vectors(g2, bound, budget.max_vectors);
    r.vectors = static_cast<long long>(s1.size() + s2.size());
    if (norm_counts(g1, s1) != norm_counts(g2, s2)) {
      r.verdict = IsometryVerdict::kNotIsometric;
      r.separating_invariant = "short-vector norm counts up to " + bound.get_str();
      return finish(r, start);
    }
    Matcher m(g1, s1, g2, budget, start);
    std::vector<int> image;
    bool found = false;
    try {
      found = m.run(image);
    } catch (const BudgetExceeded&) {
      r.nodes = m.nodes();
      r.budget_hit = m.budget_hit();
      r.verdict = IsometryVerdict::kExhausted;
      return finish(r, start);
    }
    r.nodes = m.nodes();
    if (!found) {
      r.verdict = IsometryVerdict::kNotIsometric;
      r.separating_invariant = "exhaustive search";
      return finish(r, start);
    }
    IntMatrix v(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) v(i, j) = static_cast<long>(m.vector_at(image[j])[i]);
    IntMatrix u = red1.transform * v * unimodular_inverse(red2.transform);
    if (u.transpose() * f1 * u != f2) throw Error("internal: isometry witness failed verification");
    r.verdict = IsometryVerdict::kIsometric;
    r.witness = u;
  } catch (const BudgetExceeded&) {
    r.verdict = IsometryVerdict::kExhausted;
    if (r.budget_hit.empty()) r.budget_hit = "vectors";
  }
  return finish(r, start);
}

IsometryResult semidefinite_equivalent(const IntMatrix& f1, const IntMatrix& f2, const IsometryBudget& budget) {
  if (f1.rows() != f2.rows()) throw Error("forms have different dimensions");
  auto q1 = saturation_quotient(f1);
  auto q2 = saturation_quotient(f2);
  if (q1.corank != q2.corank) {
    IsometryResult r;
    r.verdict = IsometryVerdict::kNotIsometric;
    r.separating_invariant = "corank";
    return r;
  }
  if (!is_positive_definite(q1.gram) || !is_positive_definite(q2.gram))
    throw Error("forms are not positive semidefinite");
  return is_isometric(q1.gram, q2.gram, budget);
}

IsometryResult laplacian_form_equivalent(const Graph& g1, const Graph& g2, const IsometryBudget& budget) {
  return semidefinite_equivalent(laplacian_matrix(g1), laplacian_matrix(g2), budget);
}

}  // namespace graphforms
