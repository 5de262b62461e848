#include "linalg.hpp"

#include <Eigen/SVD>

namespace ceswit {

CMat vec_to_matrix(const CVec& psi, Eigen::Index m, Eigen::Index n) {
  if (psi.size() != m * n)
    throw std::invalid_argument("vec_to_matrix: length != m*n");
  CMat a(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = psi(i * n + j);
  return a;
}

CVec matrix_to_vec(const CMat& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  CVec psi(m * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) psi(i * n + j) = a(i, j);
  return psi;
}

CVec tensor(const CVec& e, const CVec& f) {
  const Eigen::Index m = e.size(), n = f.size();
  CVec out(m * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i * n + j) = e(i) * f(j);
  return out;
}

Eigen::Index numerical_rank(const CMat& mat, const ToleranceConfig& tol) {
  if (mat.size() == 0) throw std::invalid_argument("numerical_rank: empty matrix");
  Eigen::JacobiSVD<CMat> svd(mat);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  const double cut = tol.rank_rel * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return r;
}

std::vector<CVec> null_space(const CMat& mat, const ToleranceConfig& tol) {
  if (mat.size() == 0) throw std::invalid_argument("null_space: empty matrix");
  Eigen::JacobiSVD<CMat> svd(mat, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  if (s.size() > 0 && s(0) > 0.0) {
    const double cut = tol.rank_rel * s(0);
    while (r < s.size() && s(r) > cut) ++r;
  }
  std::vector<CVec> out;
  for (Eigen::Index j = r; j < mat.cols(); ++j)
    out.push_back(svd.matrixV().col(j));
  return out;
}

CMat partial_transpose(const CMat& mat, Eigen::Index m, Eigen::Index n) {
  if (mat.rows() != m * n || mat.cols() != m * n)
    throw std::invalid_argument("partial_transpose: matrix is not (mn)x(mn)");
  CMat out(m * n, m * n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out.block(i * n, j * n, n, n) =
          mat.block(i * n, j * n, n, n).transpose();
  return out;
}

Eigen::Index schmidt_rank(const CVec& psi, Eigen::Index m, Eigen::Index n,
                          const ToleranceConfig& tol) {
  if (psi.norm() < kZeroNorm)
    throw std::invalid_argument("schmidt_rank: zero vector");
  return numerical_rank(vec_to_matrix(psi, m, n), tol);
}

std::vector<CVec> orthonormalize(const std::vector<CVec>& vectors,
                                 const ToleranceConfig& tol,
                                 bool require_independent) {
  std::vector<CVec> basis;
  for (const CVec& v : vectors) {
    CVec w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const CVec& b : basis) w -= b * b.dot(w);
    const double nrm = w.norm();
    // relative dependence threshold: the surviving component must not be
    // pure roundoff of the input
    if (nrm < 1e-8 * std::max(1.0, v.norm())) {
      if (require_independent)
        throw std::invalid_argument("orthonormalize: dependent input set");
      continue;
    }
    basis.push_back(w / nrm);
  }
  (void)tol;
  return basis;
}

CMat random_unitary(Eigen::Index dim, Rng& rng) {
  CMat g = rng.gaussian_matrix(dim, dim);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  // fix phases so the result does not depend on QR sign conventions
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace ceswit
