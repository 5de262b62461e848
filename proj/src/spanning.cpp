#include "spanning.hpp"

namespace ceswit {

ProductVector partial_conjugate(const ProductVector& p) {
  ProductVector q = p;
  q.f = p.f.conjugate();
  return q;
}

namespace {

CMat projector_of(const std::vector<CVec>& vecs, const ToleranceConfig& tol,
                  Eigen::Index dim) {
  CMat p = CMat::Zero(dim, dim);
  for (const CVec& b : orthonormalize(vecs, tol, false)) p += b * b.adjoint();
  return p;
}

}  // namespace

SpanReport span_from_products(const std::vector<ProductVector>& prods, int m,
                              int n, const ToleranceConfig& tol) {
  SpanReport rep;
  rep.samples_used = static_cast<int>(prods.size());
  rep.sufficient = rep.samples_used >= m * n;
  if (prods.empty()) {
    rep.span_dim = 0;
    CMat id = CMat::Identity(static_cast<Eigen::Index>(m) * n,
                             static_cast<Eigen::Index>(m) * n);
    for (Eigen::Index j = 0; j < id.cols(); ++j)
      rep.kernel_basis.push_back(id.col(j));
    return rep;
  }
  CMat rows(static_cast<Eigen::Index>(prods.size()),
            static_cast<Eigen::Index>(m) * n);
  for (std::size_t i = 0; i < prods.size(); ++i) {
    const ProductVector& p = prods[i];
    CVec w = tensor(p.e, p.f.conjugate());
    w /= w.norm();
    rows.row(static_cast<Eigen::Index>(i)) = w.adjoint();
  }
  rep.span_dim = static_cast<int>(numerical_rank(rows, tol));
  rep.kernel_basis = null_space(rows, tol);
  return rep;
}

SpanReport span_of_PV(const Subspace& v, int samples, Rng& rng,
                      const ToleranceConfig& tol) {
  const int m = v.m(), n = v.n();
  if (samples <= 0) samples = 4 * m * n;
  std::vector<ProductVector> prods;
  Rng gen = rng.split(0x6E);
  for (int k = 0; k < samples; ++k) {
    Rng r = gen.split(static_cast<std::uint64_t>(k));
    for (ProductVector& p : generic_solutions(v, r.gaussian_vector(m), tol))
      prods.push_back(std::move(p));
  }
  if (v.family()) {
    const FamilySpec& fam = *v.family();
    const int class_count = 2 * m * n;
    if (fam.kind == FamilyKind::symmetric || fam.kind == FamilyKind::general) {
      Rng r1 = rng.split(0x51);
      for (ProductVector& p :
           enumerate_class({fam, SolutionClass::S1}, class_count, r1, tol))
        prods.push_back(std::move(p));
      Rng r2 = rng.split(0x52);
      for (ProductVector& p :
           enumerate_class({fam, SolutionClass::S2}, class_count, r2, tol))
        prods.push_back(std::move(p));
      if (fam.kind == FamilyKind::general) {
        Rng r3 = rng.split(0x53);
        for (ProductVector& p :
             enumerate_class({fam, SolutionClass::S3}, class_count, r3, tol))
          prods.push_back(std::move(p));
      }
    } else if (fam.kind == FamilyKind::counterexample) {
      // the second solution class lives on the x0 = 0 stratum, which
      // Gaussian draws never hit
      Rng r = rng.split(0x54);
      for (int k = 0; k < class_count; ++k) {
        Rng rk = r.split(static_cast<std::uint64_t>(k));
        CVec x = rk.gaussian_vector(m);
        x(0) = 0.0;
        for (ProductVector& p : generic_solutions(v, x, tol))
          prods.push_back(std::move(p));
      }
    }
  }
  SpanReport rep = span_from_products(prods, m, n, tol);
  if (v.family() && (v.family()->kind == FamilyKind::symmetric ||
                     v.family()->kind == FamilyKind::general)) {
    rep.predicted_kernel = predicted_kernel(*v.family());
    const Eigen::Index d = static_cast<Eigen::Index>(m) * n;
    const CMat pk = projector_of(rep.kernel_basis, tol, d);
    const CMat pp = projector_of(*rep.predicted_kernel, tol, d);
    Eigen::JacobiSVD<CMat> svd(pk - pp);
    const double dist =
        svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    rep.kernel_match = dist <= kKernelMatchTol;
  }
  return rep;
}

std::vector<CVec> predicted_kernel(const FamilySpec& family) {
  family.validate();
  const int m = family.m, n = family.n;
  if (family.kind != FamilyKind::symmetric && family.kind != FamilyKind::general) {
    if (family.kind == FamilyKind::counterexample)
      throw std::invalid_argument(
          "predicted_kernel: no closed-form kernel for the counterexample "
          "family; check membership of |0>|n-1> instead");
    throw std::invalid_argument("predicted_kernel: symmetric or general family required");
  }
  CVec omega_m = CVec::Zero(m);
  omega_m.tail(m - 1).setOnes();
  CVec omega_n = CVec::Zero(n);
  omega_n.segment(1, m - 1).setOnes();
  CVec e0m = CVec::Zero(m);
  e0m(0) = 1.0;
  CVec e0n = CVec::Zero(n);
  e0n(0) = 1.0;
  std::vector<CVec> out;
  out.push_back(tensor(e0m, omega_n));  // |0>|w>
  out.push_back(tensor(omega_m, e0n));  // |w>|0>
  for (int j = m; j < n; ++j) {
    CVec ej = CVec::Zero(n);
    ej(j) = 1.0;
    out.push_back(tensor(omega_m, ej));  // |w>|j>
  }
  return out;
}

int dim_span_S1_star(int m, Rng& rng, const ToleranceConfig& tol) {
  if (m < 3) throw std::invalid_argument("dim_span_S1_star: m >= 3 required");
  FamilySpec fam{FamilyKind::symmetric, m, m, {}};
  const int count = 4 * (m - 1) * (m - 1);
  Rng r = rng.split(0x515);
  const std::vector<ProductVector> s1 =
      enumerate_class({fam, SolutionClass::S1}, count, r, tol);
  return span_from_products(s1, m, m, tol).span_dim;
}

bool has_spanning_property(const Subspace& v, int samples, Rng& rng,
                           const ToleranceConfig& tol) {
  return span_of_PV(v, samples, rng, tol).span_dim == v.m() * v.n();
}

}  // namespace ceswit
