#include "families.hpp"

namespace ceswit {

namespace {

CVec basis_vec(int m, int n, int i, int j) {
  CVec v = CVec::Zero(static_cast<Eigen::Index>(m) * n);
  v(i * n + j) = 1.0;
  return v;
}

std::vector<CVec> symmetric_spanning(int m, int n, const CMat& a_tilde) {
  std::vector<CVec> vs;
  for (int i = 1; i < m; ++i)
    vs.push_back(basis_vec(m, n, 0, i) - basis_vec(m, n, i, 0));
  CMat a = CMat::Zero(m, n);
  a.block(1, 1, m - 1, m - 1) = a_tilde;
  vs.push_back(matrix_to_vec(a));
  return vs;
}

}  // namespace

CMat default_a_tilde(int m) {
  if (m < 3) throw std::invalid_argument("default_a_tilde: m >= 3 required");
  CMat a = CMat::Identity(m - 1, m - 1);
  for (int i = 0; i < m - 1; ++i)
    for (int j = i + 1; j < m - 1; ++j) a(i, j) = 2.0;
  return a;
}

CVec antisym_seed(int m, int n) {
  if (m < 3) throw std::invalid_argument("antisym_seed: m >= 3 required");
  // lowest-index antisymmetric direction orthogonal to every |0i>-|i0>
  CVec v = CVec::Zero(static_cast<Eigen::Index>(m) * n);
  v(1 * n + 2) = 1.0 / std::sqrt(2.0);
  v(2 * n + 1) = -1.0 / std::sqrt(2.0);
  return v;
}

std::vector<CVec> family_spanning_vectors(const FamilySpec& spec) {
  spec.validate();
  const int m = spec.m, n = spec.n;
  const CMat at = spec.a_tilde ? *spec.a_tilde : default_a_tilde(m);
  switch (spec.kind) {
    case FamilyKind::symmetric:
      return symmetric_spanning(m, m, at);
    case FamilyKind::general: {
      std::vector<CVec> vs = symmetric_spanning(m, n, at);
      for (int i = m + 1; i <= n; ++i)
        vs.push_back(basis_vec(m, n, 0, i - 2) - basis_vec(m, n, 1, i - 1));
      return vs;
    }
    case FamilyKind::counterexample: {
      std::vector<CVec> vs;
      for (int i = 1; i < m; ++i)
        vs.push_back(basis_vec(m, n, 0, i) - basis_vec(m, n, i, 0));
      for (int i = m; i <= n - 2; ++i)
        vs.push_back(basis_vec(m, n, 0, i) - basis_vec(m, n, 1, i - 1));
      vs.push_back(basis_vec(m, n, 0, n - 1) - antisym_seed(m, n));
      return vs;
    }
    case FamilyKind::footnote_pair: {
      auto bv = [](int i, int j) { return basis_vec(3, 4, i, j); };
      return {bv(0, 1) - bv(1, 0),
              bv(0, 2) - bv(2, 0),
              bv(0, 3) - (bv(1, 2) - bv(2, 1)),
              bv(1, 3) - bv(2, 2),
              bv(1, 1) - bv(2, 3),
              bv(0, 0) - bv(1, 3) - bv(2, 1)};
    }
  }
  throw std::logic_error("family_spanning_vectors: unreachable");
}

Subspace symmetric_family(int m, const std::optional<CMat>& a_tilde,
                          const ToleranceConfig& tol) {
  FamilySpec spec{FamilyKind::symmetric, m, m, a_tilde};
  spec.validate();
  const CMat at = a_tilde ? *a_tilde : default_a_tilde(m);
  if (numerical_rank(at, tol) != m - 1)
    throw std::invalid_argument("symmetric_family: A_tilde must have rank m-1");
  std::vector<CVec> vs = symmetric_spanning(m, m, at);
  // defining vectors are mutually orthogonal: store them normalized, unmixed
  std::vector<CVec> basis;
  for (CVec& v : vs) basis.push_back(v / v.norm());
  Subspace s(m, m, std::move(basis), tol);
  s.set_family(FamilySpec{FamilyKind::symmetric, m, m, at});
  return s;
}

Subspace general_family(int m, int n, const ToleranceConfig& tol) {
  FamilySpec spec{FamilyKind::general, m, n, default_a_tilde(m)};
  spec.validate();
  // Psi_m overlaps the i > m vectors, so the stored basis is orthonormalized
  Subspace s = make_subspace(m, n, family_spanning_vectors(spec), tol);
  s.set_family(spec);
  return s;
}

Subspace counterexample_family(int m, int n, const ToleranceConfig& tol) {
  FamilySpec spec{FamilyKind::counterexample, m, n, {}};
  spec.validate();
  std::vector<CVec> vs = family_spanning_vectors(spec);
  // orthogonal except when the middle group meets the antisymmetric seed
  bool orthogonal = true;
  for (std::size_t i = 0; i < vs.size() && orthogonal; ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (std::abs(vs[i].dot(vs[j])) > tol.orth_tol) {
        orthogonal = false;
        break;
      }
  Subspace s = orthogonal
                   ? [&] {
                       std::vector<CVec> basis;
                       for (CVec& v : vs) basis.push_back(v / v.norm());
                       return Subspace(m, n, std::move(basis), tol);
                     }()
                   : make_subspace(m, n, vs, tol);
  s.set_family(spec);
  return s;
}

std::pair<Subspace, Subspace> footnote_pair(const ToleranceConfig& tol) {
  FamilySpec spec{FamilyKind::footnote_pair, 3, 4, {}};
  Subspace first = make_subspace(3, 4, family_spanning_vectors(spec), tol);
  first.set_family(spec);
  // orthocomplement: kernel of the stacked bras
  CMat rows(first.dim(), 12);
  for (int i = 0; i < first.dim(); ++i)
    rows.row(i) = first.basis_vector(i).adjoint();
  std::vector<CVec> comp = null_space(rows, tol);
  Subspace second(3, 4, comp, tol);
  second.set_family(spec);
  return {first, second};
}

Subspace build_family(const FamilySpec& spec, const ToleranceConfig& tol) {
  spec.validate();
  switch (spec.kind) {
    case FamilyKind::symmetric:
      return symmetric_family(spec.m, spec.a_tilde, tol);
    case FamilyKind::general:
      return general_family(spec.m, spec.n, tol);
    case FamilyKind::counterexample:
      return counterexample_family(spec.m, spec.n, tol);
    case FamilyKind::footnote_pair:
      return footnote_pair(tol).first;
  }
  throw std::logic_error("build_family: unreachable");
}

Subspace extend_ces(const Subspace& v, Rng& rng, const ToleranceConfig& tol,
                    int max_tries) {
  const int m = v.m(), n = v.n();
  if (v.dim() >= max_ces_dim(m, n))
    throw std::invalid_argument("extend_ces: subspace already maximal");
  const CMat p = v.projector();
  const CMat id = CMat::Identity(p.rows(), p.cols());
  CesCertificate best;
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Rng r = rng.split(static_cast<std::uint64_t>(attempt));
    CVec g = (id - p) * r.gaussian_vector(m * n);
    const double nrm = g.norm();
    if (nrm < kZeroNorm) continue;
    g /= nrm;
    std::vector<CVec> basis = v.basis();
    basis.push_back(g);
    Subspace cand(m, n, std::move(basis), tol);
    CesSearchOptions opts;
    opts.seed = rng.split(0xE77 + attempt).seed();
    const CesCertificate cert = is_ces(cand, tol, opts);
    if (cert.is_ces) return cand;
    if (cert.best_product_overlap > best.best_product_overlap) best = cert;
  }
  throw std::runtime_error(
      "extend_ces: max_tries exhausted; best overlap found " +
      std::to_string(best.best_product_overlap));
}

}  // namespace ceswit
