#include "subspace.hpp"

#include <Eigen/Eigenvalues>

namespace ceswit {

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::symmetric: return "symmetric";
    case FamilyKind::general: return "general";
    case FamilyKind::counterexample: return "counterexample";
    case FamilyKind::footnote_pair: return "footnote_pair";
  }
  return "?";
}

FamilyKind family_kind_from_name(const std::string& s) {
  if (s == "symmetric") return FamilyKind::symmetric;
  if (s == "general") return FamilyKind::general;
  if (s == "counterexample") return FamilyKind::counterexample;
  if (s == "footnote_pair") return FamilyKind::footnote_pair;
  throw std::invalid_argument("unknown family kind: " + s);
}

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::symmetric:
      if (m < 3 || n != m)
        throw std::invalid_argument("symmetric family requires m = n >= 3");
      break;
    case FamilyKind::general:
      if (m < 3 || n <= m)
        throw std::invalid_argument("general family requires 3 <= m < n");
      break;
    case FamilyKind::counterexample:
      if (m < 3 || n <= m)
        throw std::invalid_argument("counterexample family requires 3 <= m < n");
      break;
    case FamilyKind::footnote_pair:
      if (m != 3 || n != 4)
        throw std::invalid_argument("footnote pair lives in H_{3,4}");
      break;
  }
  if (a_tilde) {
    if (a_tilde->rows() != m - 1 || a_tilde->cols() != m - 1)
      throw std::invalid_argument("a_tilde must be (m-1)x(m-1)");
  }
}

Subspace::Subspace(int m, int n, std::vector<CVec> orthonormal_basis,
                   const ToleranceConfig& tol)
    : m_(m), n_(n), basis_(std::move(orthonormal_basis)) {
  if (m_ < 1 || n_ < 1) throw std::invalid_argument("Subspace: bad dimensions");
  if (basis_.empty()) throw std::invalid_argument("Subspace: empty basis");
  if (static_cast<int>(basis_.size()) > m_ * n_)
    throw std::invalid_argument("Subspace: more vectors than dimensions");
  for (const CVec& v : basis_)
    if (v.size() != static_cast<Eigen::Index>(m_) * n_)
      throw std::invalid_argument("Subspace: basis vector has wrong length");
  // Gram matrix must be the identity to orth_tol
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Complex g = basis_[i].dot(basis_[j]);
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - want) > 10 * tol.orth_tol)
        throw std::invalid_argument("Subspace: basis is not orthonormal");
    }
}

CMat Subspace::basis_matrix() const {
  CMat b(static_cast<Eigen::Index>(m_) * n_, dim());
  for (int i = 0; i < dim(); ++i) b.col(i) = basis_[i];
  return b;
}

CMat Subspace::projector() const {
  const CMat b = basis_matrix();
  return b * b.adjoint();
}

Subspace make_subspace(int m, int n, const std::vector<CVec>& vectors,
                       const ToleranceConfig& tol) {
  if (vectors.empty()) throw std::invalid_argument("make_subspace: no vectors");
  CMat rows(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(m) * n);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != static_cast<Eigen::Index>(m) * n)
      throw std::invalid_argument("make_subspace: vector of wrong length");
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  if (numerical_rank(rows, tol) != static_cast<Eigen::Index>(vectors.size()))
    throw std::invalid_argument("make_subspace: dependent input set");
  return Subspace(m, n, orthonormalize(vectors, tol, true), tol);
}

CMat local_projection(const Subspace& v, const CVec& x) {
  if (x.size() != v.m())
    throw std::invalid_argument("local_projection: x must have length m");
  CMat out = CMat::Zero(v.n(), v.n());
  for (int i = 0; i < v.dim(); ++i) {
    const CVec w = v.basis_as_matrix(i).transpose() * x.conjugate();
    out += w * w.adjoint();
  }
  return out;
}

int max_ces_dim(int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("max_ces_dim: m, n >= 2 required");
  return (m - 1) * (n - 1);
}

namespace {

// One alternating-ascent run of ||Pi_V (e ox f)||^2 from a random start.
double alternate_once(const Subspace& v, Rng& rng, int max_iters, CVec& e_out,
                      CVec& f_out) {
  const int m = v.m(), n = v.n();
  CVec e = rng.unit_vector(m);
  CVec f(n);
  double val = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    // best f for fixed e: top eigenvector of the local projection at e
    CMat t = CMat::Zero(n, n);
    for (int i = 0; i < v.dim(); ++i) {
      const CVec w = v.basis_as_matrix(i).transpose() * e.conjugate();
      t += w * w.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<CMat> est(t);
    f = est.eigenvectors().col(n - 1);
    // best e for fixed f
    CMat s = CMat::Zero(m, m);
    for (int i = 0; i < v.dim(); ++i) {
      const CVec w = v.basis_as_matrix(i) * f.conjugate();
      s += w * w.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<CMat> ess(s);
    e = ess.eigenvectors().col(m - 1);
    const double next = ess.eigenvalues()(m - 1);
    if (std::abs(next - val) < 1e-15) {
      val = next;
      break;
    }
    val = next;
  }
  e_out = e;
  f_out = f;
  return val;
}

}  // namespace

CesCertificate is_ces(const Subspace& v, const ToleranceConfig& tol,
                      const CesSearchOptions& budget) {
  CesCertificate cert;
  Rng root(budget.seed);
  for (int s = 0; s < budget.starts; ++s) {
    Rng r = root.split(static_cast<std::uint64_t>(s));
    CVec e, f;
    const double val = alternate_once(v, r, budget.max_iters, e, f);
    if (val > cert.best_product_overlap) {
      cert.best_product_overlap = val;
      cert.witness = std::make_pair(e, f);
    }
  }
  // Structured check (dim <= 4): a product vector in V corresponds to a
  // rank-1 matrix in the span of the basis matrices; scan random
  // combinations for simultaneously vanishing 2x2 minors.
  if (v.dim() <= 4 && budget.minor_scan > 0) {
    Rng r = root.split(0xA1FA);
    for (int k = 0; k < budget.minor_scan; ++k) {
      const CVec alpha = r.unit_vector(v.dim());
      CMat a = CMat::Zero(v.m(), v.n());
      for (int i = 0; i < v.dim(); ++i) a += alpha(i) * v.basis_as_matrix(i);
      const double scale = a.cwiseAbs().maxCoeff();
      if (scale < kZeroNorm) continue;
      double worst_minor = 0.0;
      for (int i0 = 0; i0 < v.m(); ++i0)
        for (int i1 = i0 + 1; i1 < v.m(); ++i1)
          for (int j0 = 0; j0 < v.n(); ++j0)
            for (int j1 = j0 + 1; j1 < v.n(); ++j1) {
              const Complex det = a(i0, j0) * a(i1, j1) - a(i0, j1) * a(i1, j0);
              worst_minor = std::max(worst_minor, std::abs(det));
            }
      if (worst_minor < tol.orth_tol * scale * scale) {
        // rank-1 combination found: extract its product factors
        Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
        cert.best_product_overlap = 1.0;
        cert.witness = std::make_pair(CVec(svd.matrixU().col(0)),
                                      CVec(svd.matrixV().col(0).conjugate()));
      }
    }
  }
  cert.is_ces = cert.best_product_overlap < 1.0 - kCesGap;
  return cert;
}

bool is_supported(const Subspace& v, const ToleranceConfig& tol) {
  const int m = v.m(), n = v.n();
  CMat red_a = CMat::Zero(m, m);  // Tr_B
  CMat red_b = CMat::Zero(n, n);  // Tr_A
  for (int i = 0; i < v.dim(); ++i) {
    const CMat a = v.basis_as_matrix(i);
    red_a += a * a.adjoint();
    red_b += a.transpose() * a.conjugate();
  }
  return numerical_rank(red_a, tol) == m && numerical_rank(red_b, tol) == n;
}

}  // namespace ceswit
