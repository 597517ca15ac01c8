#include "graphforms/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphforms {

Eigen::MatrixXd laplacian_real(const Graph& g) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (auto [u, v] : g.edges()) {
    m(u, v) = m(v, u) = -1;
    m(u, u) += 1;
    m(v, v) += 1;
  }
  return m;
}

SpectralDecomposition::SpectralDecomposition(const Eigen::MatrixXd& m, double tol) : tol_(tol) {
  if (m.rows() != m.cols()) throw Error("spectral decomposition needs a square matrix");
  if (m.size() && (m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + m.cwiseAbs().maxCoeff())) throw Error("spectral decomposition needs a symmetric matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw Error("eigensolver did not converge");
  raw_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
  radius_ = raw_.cwiseAbs().maxCoeff();
  const double gap = tol * std::max(1.0, radius_);
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && raw_(j) - raw_(j - 1) < gap) ++j;
    double mean = raw_.segment(i, j - i).mean();
    if (std::abs(mean) < gap) mean = 0.0;
    values_.push_back(mean);
    mult_.push_back(j - i);
    start_.push_back(i);
    i = j;
  }
}

SpectralDecomposition SpectralDecomposition::of_laplacian(const Graph& g, double tol) {
  return SpectralDecomposition(laplacian_real(g), tol);
}

Eigen::MatrixXd SpectralDecomposition::eigenspace(int k) const {
  return vectors_.middleCols(start_.at(k), mult_.at(k));
}

Eigen::MatrixXd SpectralDecomposition::projector(int k) const {
  Eigen::MatrixXd phi = eigenspace(k);
  return phi * phi.transpose();
}

nlohmann::json SpectralDecomposition::to_json(bool with_projectors) const {
  nlohmann::json j;
  j["eigenvalues"] = values_;
  j["multiplicities"] = mult_;
  j["tolerance"] = tol_;
  if (with_projectors) {
    nlohmann::json ps = nlohmann::json::array();
    for (int k = 0; k < distinct_count(); ++k) {
      Eigen::MatrixXd t = projector(k);
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < t.rows(); ++r) {
        std::vector<double> row(t.cols());
        for (int c = 0; c < t.cols(); ++c) row[c] = t(r, c);
        rows.push_back(row);
      }
      ps.push_back(rows);
    }
    j["projectors"] = ps;
  }
  return j;
}

Eigen::MatrixXd green(const Graph& g, double u) {
  if (!(u > 0)) throw Error("green needs u > 0");
  const int n = g.order();
  int ncomp = 0;
  auto comp = g.component_ids(&ncomp);
  std::vector<int> size(ncomp, 0);
  for (int c : comp) ++size[c];
  // M + uI + P, with P the block all-ones matrix per component, is well conditioned.
  Eigen::MatrixXd s = laplacian_real(g);
  for (int i = 0; i < n; ++i) {
    s(i, i) += u;
    for (int j = 0; j < n; ++j)
      if (comp[i] == comp[j]) s(i, j) += 1.0;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) throw Error("Green's function solve failed");
  Eigen::MatrixXd x = llt.solve(Eigen::MatrixXd::Identity(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (comp[i] == comp[j]) {
        double c = size[comp[i]];
        x(i, j) += (1.0 / u - 1.0 / (u + c)) / c;
      }
  return x;
}

Eigen::MatrixXd green_after_edge_deletion(const Eigen::MatrixXd& gr, int x1, int x2) {
  const int n = static_cast<int>(gr.rows());
  if (x1 < 0 || x2 < 0 || x1 >= n || x2 >= n || x1 == x2) throw Error("bad edge endpoints");
  // M' = M - w w^T with w = e_x1 - e_x2.
  Eigen::VectorXd gw = gr.col(x1) - gr.col(x2);
  double denom = 1.0 - (gw(x1) - gw(x2));
  if (!(denom > 0)) throw Error("edge deletion update is singular");
  return gr + gw * gw.transpose() / denom;
}

Eigen::MatrixXd fractional_power(const Graph& g, double u, double alpha) {
  auto sd = SpectralDecomposition::of_laplacian(g);
  const int n = g.order();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < sd.distinct_count(); ++k) {
    double base = sd.eigenvalues()[k] + u;
    if (base < 0 || (base == 0 && alpha < 0)) throw Error("fractional power undefined for this shift");
    double w = std::pow(base, alpha);
    if (w == 0) continue;
    Eigen::MatrixXd phi = sd.eigenspace(k);
    out.noalias() += w * (phi * phi.transpose());
  }
  return out;
}

long long STInvariant::total_multiplicity() const {
  long long s = 0;
  for (const auto& r : records) s += r.multiplicity;
  return s;
}

nlohmann::json STInvariant::to_json() const {
  nlohmann::json j;
  j["eigenvalues"] = eigenvalues;
  j["quantum"] = quantum;
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) recs.push_back({{"t", r.t}, {"multiplicity", r.multiplicity}});
  j["records"] = recs;
  return j;
}

namespace {

// Splits idx[lo, hi) into runs whose coordinate `dim` values are within `gap` of
// their neighbours, recursing on the next coordinate. Emits one record per run.
void cluster(const std::vector<std::vector<double>>& rows, std::vector<int>& idx, size_t lo, size_t hi,
             size_t dim, double gap, std::vector<STRecord>& out) {
  if (lo >= hi) return;
  const size_t dims = rows.front().size();
  if (dim == dims) {
    STRecord r;
    r.t.assign(dims, 0.0);
    for (size_t i = lo; i < hi; ++i)
      for (size_t d = 0; d < dims; ++d) r.t[d] += rows[idx[i]][d];
    for (auto& v : r.t) {
      v /= static_cast<double>(hi - lo);
      v = std::round(v / gap) * gap;
      if (v == 0) v = 0;  // no negative zero in output
    }
    r.multiplicity = static_cast<int>(hi - lo);
    out.push_back(std::move(r));
    return;
  }
  std::sort(idx.begin() + lo, idx.begin() + hi, [&](int a, int b) { return rows[a][dim] < rows[b][dim]; });
  size_t start = lo;
  for (size_t i = lo + 1; i <= hi; ++i) {
    if (i == hi || rows[idx[i]][dim] - rows[idx[i - 1]][dim] > gap) {
      cluster(rows, idx, start, i, dim + 1, gap, out);
      start = i;
    }
  }
}

}  // namespace

STInvariant st_invariant(const Graph& g, double quantum, double group_tol) {
  if (!(quantum > 0)) throw Error("quantum must be positive");
  auto sd = SpectralDecomposition::of_laplacian(g, group_tol);
  const int n = g.order();
  const int m = sd.distinct_count();
  std::vector<Eigen::MatrixXd> t;
  for (int k = 0; k < m; ++k) t.push_back(sd.projector(k));
  std::vector<std::vector<double>> rows(static_cast<size_t>(n) * n, std::vector<double>(m));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int k = 0; k < m; ++k) rows[static_cast<size_t>(x) * n + y][k] = t[k](x, y);
  STInvariant st;
  st.quantum = quantum;
  st.eigenvalues = sd.eigenvalues();
  std::vector<int> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  if (!rows.empty()) cluster(rows, idx, 0, rows.size(), 0, quantum, st.records);
  return st;
}

bool st_equal(const STInvariant& a, const STInvariant& b, double tol) {
  if (a.quantum != b.quantum) throw Error("ST invariants use incompatible quantization");
  if (a.eigenvalues.size() != b.eigenvalues.size() || a.records.size() != b.records.size()) return false;
  for (size_t k = 0; k < a.eigenvalues.size(); ++k)
    if (std::abs(a.eigenvalues[k] - b.eigenvalues[k]) > tol) return false;
  for (size_t i = 0; i < a.records.size(); ++i) {
    const auto& ra = a.records[i];
    const auto& rb = b.records[i];
    if (ra.multiplicity != rb.multiplicity) return false;
    for (size_t k = 0; k < ra.t.size(); ++k)
      if (std::abs(ra.t[k] - rb.t[k]) > tol) return false;
  }
  return true;
}

}  // namespace graphforms
