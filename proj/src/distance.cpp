#include "graphforms/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphforms {

namespace {

struct PositiveSpectrum {
  Eigen::MatrixXd phi;         // n x r eigenvectors with eigenvalue above cutoff
  Eigen::VectorXd lambda;      // r eigenvalues
  std::vector<int> eig_group;  // distinct-eigenvalue index of each column
  int groups = 0;
};

PositiveSpectrum positive_part(const SpectralDecomposition& sd, double cutoff) {
  PositiveSpectrum ps;
  const double cut = cutoff * sd.spectral_radius();
  std::vector<int> cols;
  int col = 0;
  for (int k = 0; k < sd.distinct_count(); ++k) {
    bool keep = sd.eigenvalues()[k] > cut;
    for (int i = 0; i < sd.multiplicities()[k]; ++i, ++col)
      if (keep) {
        cols.push_back(col);
        ps.eig_group.push_back(ps.groups);
      }
    if (keep) ++ps.groups;
  }
  const int n = sd.dimension();
  ps.phi.resize(n, static_cast<int>(cols.size()));
  ps.lambda.resize(static_cast<int>(cols.size()));
  // Eigenvalues inside a group are replaced by the group value.
  col = 0;
  std::vector<double> value_of_col;
  for (int k = 0; k < sd.distinct_count(); ++k)
    for (int i = 0; i < sd.multiplicities()[k]; ++i) value_of_col.push_back(sd.eigenvalues()[k]);
  for (size_t c = 0; c < cols.size(); ++c) {
    ps.phi.col(static_cast<int>(c)) = sd.eigenvectors().col(cols[c]);
    ps.lambda(static_cast<int>(c)) = value_of_col[cols[c]];
  }
  return ps;
}

Eigen::MatrixXd resolvent(const PositiveSpectrum& ps, double u) {
  Eigen::VectorXd w = (ps.lambda.array() + u).inverse().matrix();
  return ps.phi * w.asDiagonal() * ps.phi.transpose();
}

double entry_at(const PositiveSpectrum& ps, int x, int y, double u) {
  double s = 0;
  for (int k = 0; k < ps.phi.cols(); ++k) s += ps.phi(x, k) * ps.phi(y, k) / (ps.lambda(k) + u);
  return s;
}

// Order of the n^2 entries: by value at u_1, ties refined lexicographically by
// the values at u_2, u_3, ... Entries whose projector coordinates coincide are the
// same function of u, so only one representative per such class is evaluated.
std::vector<int> entry_order(const PositiveSpectrum& ps, const Eigen::MatrixXd& t1,
                             const std::vector<double>& u, double tie_quantum) {
  const int n = static_cast<int>(t1.rows());
  const size_t total = static_cast<size_t>(n) * n;
  std::vector<int> perm(total);
  std::iota(perm.begin(), perm.end(), 0);
  auto val = [&](int idx) { return t1(idx / n, idx % n); };
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return val(a) < val(b); });
  const double q = tie_quantum * std::max(1.0, t1.cwiseAbs().maxCoeff());

  size_t lo = 0;
  while (lo < total) {
    size_t hi = lo + 1;
    while (hi < total && val(perm[hi]) - val(perm[hi - 1]) <= q) ++hi;
    if (hi - lo > 1 && u.size() > 1) {
      // Fingerprint each tied entry by its per-eigenspace projector values.
      std::vector<std::vector<double>> fp(hi - lo, std::vector<double>(ps.groups, 0.0));
      for (size_t i = lo; i < hi; ++i) {
        int x = perm[i] / n, y = perm[i] % n;
        for (int k = 0; k < ps.phi.cols(); ++k) fp[i - lo][ps.eig_group[k]] += ps.phi(x, k) * ps.phi(y, k);
      }
      std::vector<int> local(hi - lo);
      std::iota(local.begin(), local.end(), 0);
      std::stable_sort(local.begin(), local.end(), [&](int a, int b) { return fp[a] < fp[b]; });
      auto same = [&](int a, int b) {
        for (int k = 0; k < ps.groups; ++k)
          if (std::abs(fp[a][k] - fp[b][k]) > q) return false;
        return true;
      };
      // Classes of identical fingerprints, each keyed by its representative.
      struct Class {
        std::vector<long long> key;
        std::vector<int> members;
      };
      std::vector<Class> classes;
      for (size_t i = 0; i < local.size(); ++i) {
        if (i == 0 || !same(local[i - 1], local[i])) {
          Class c;
          int idx = perm[lo + local[i]];
          for (size_t j = 1; j < u.size(); ++j) c.key.push_back(std::llround(entry_at(ps, idx / n, idx % n, u[j]) / q));
          classes.push_back(std::move(c));
        }
        classes.back().members.push_back(perm[lo + local[i]]);
      }
      if (classes.size() > 1) {
        std::stable_sort(classes.begin(), classes.end(), [](const Class& a, const Class& b) { return a.key < b.key; });
        size_t pos = lo;
        for (const auto& c : classes)
          for (int m : c.members) perm[pos++] = m;
      }
    }
    lo = hi;
  }
  return perm;
}

bool disconnected(const Graph& g) { return g.order() > 0 && !g.connected(); }

}  // namespace

Eigen::MatrixXd tilde_green(const SpectralDecomposition& sd, double u, double cutoff) {
  if (!(u > 0)) throw Error("tilde_green needs u > 0");
  return resolvent(positive_part(sd, cutoff), u);
}

Eigen::MatrixXd tilde_green(const Graph& g, double u, double cutoff) {
  return tilde_green(SpectralDecomposition::of_laplacian(g), u, cutoff);
}

Graph pad_isolated(const Graph& g, int n) {
  if (n < g.order()) throw Error("cannot pad to fewer vertices");
  return Graph(n, g.edges());
}

DistanceReport distance(const Graph& g1, const Graph& g2, const DistanceOptions& opts) {
  if (g1.order() != g2.order()) throw Error("distance needs graphs of equal order (pad first)");
  if (!(opts.c > 0)) throw Error("c must be positive");
  const int n = g1.order();
  DistanceReport rep;
  rep.disconnected_input = disconnected(g1) || disconnected(g2);
  if (n == 0) return rep;

  auto sd1 = SpectralDecomposition::of_laplacian(g1);
  auto sd2 = SpectralDecomposition::of_laplacian(g2);
  {
    double scale = std::max({1.0, sd1.spectral_radius(), sd2.spectral_radius()});
    rep.cospectral = (sd1.raw_eigenvalues() - sd2.raw_eigenvalues()).cwiseAbs().maxCoeff() <= opts.cospectral_tol * scale;
  }
  auto p1 = positive_part(sd1, opts.zero_mode_cutoff);
  auto p2 = positive_part(sd2, opts.zero_mode_cutoff);
  double l1 = 0;
  if (p1.lambda.size()) l1 = p1.lambda.minCoeff();
  if (p2.lambda.size()) l1 = l1 > 0 ? std::min(l1, p2.lambda.minCoeff()) : p2.lambda.minCoeff();
  rep.lambda1 = l1;
  if (l1 <= 0) return rep;  // both edgeless: both resolvents vanish

  const int samples = opts.samples > 0 ? opts.samples : n;
  for (int j = 1; j <= samples; ++j) rep.u.push_back(opts.c * j * l1 / n);

  Eigen::MatrixXd a = resolvent(p1, rep.u[0]);
  Eigen::MatrixXd b = resolvent(p2, rep.u[0]);
  auto perm1 = entry_order(p1, a, rep.u, opts.tie_quantum);
  auto perm2 = entry_order(p2, b, rep.u, opts.tie_quantum);

  double total = 0;
  for (int j = 0; j < samples; ++j) {
    if (j > 0) {
      a = resolvent(p1, rep.u[j]);
      b = resolvent(p2, rep.u[j]);
    }
    const double* pa = a.data();
    const double* pb = b.data();
    double s = 0;
    // Column-major storage: entry (x, y) sits at x + y*n; index idx = x*n + y.
    for (size_t i = 0; i < perm1.size(); ++i) {
      int ia = perm1[i], ib = perm2[i];
      double d = pa[(ia / n) + static_cast<size_t>(ia % n) * n] - pb[(ib / n) + static_cast<size_t>(ib % n) * n];
      s += d * d;
    }
    rep.contributions.push_back(s);
    total += s;
  }
  rep.value = static_cast<double>(n) * n * std::sqrt(total / samples);
  return rep;
}

nlohmann::json DistanceReport::to_json() const {
  nlohmann::json j;
  j["value"] = value;
  j["lambda1"] = lambda1;
  j["u"] = u;
  j["contributions"] = contributions;
  j["sort_rule"] = sort_rule;
  j["flags"] = {{"cospectral", cospectral}, {"disconnected_input", disconnected_input}, {"padded", padded}};
  return j;
}

}  // namespace graphforms
