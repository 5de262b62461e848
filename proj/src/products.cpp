#include "products.hpp"

namespace ceswit {

std::string solution_class_name(SolutionClass c) {
  switch (c) {
    case SolutionClass::S1: return "S1";
    case SolutionClass::S2: return "S2";
    case SolutionClass::S3: return "S3";
    case SolutionClass::generic: return "generic";
  }
  return "?";
}

ProductVector attach_product(const Subspace& v, CVec e, CVec f,
                             SolutionClass cls, std::string params) {
  if (e.size() != v.m() || f.size() != v.n())
    throw std::invalid_argument("attach_product: factor dimensions mismatch");
  const double ne = e.norm(), nf = f.norm();
  if (ne < kZeroNorm || nf < kZeroNorm)
    throw std::invalid_argument("attach_product: zero factor");
  e /= ne;
  f /= nf;
  const CVec w = tensor(e, f);
  double res = 0.0;
  for (int i = 0; i < v.dim(); ++i)
    res = std::max(res, std::abs(v.basis_vector(i).dot(w)));
  if (res > kProductResidualTol)
    throw std::invalid_argument("attach_product: not orthogonal to V, residual " +
                                std::to_string(res));
  return ProductVector{std::move(e), std::move(f), cls, std::move(params), res};
}

CMat build_Bx(const Subspace& v, const CVec& x) {
  if (x.size() != v.m()) throw std::invalid_argument("build_Bx: x has wrong length");
  CMat b(v.dim(), v.n());
  for (int i = 0; i < v.dim(); ++i)
    b.row(i) = (v.basis_as_matrix(i).adjoint() * x).transpose();
  return b;
}

CMat build_Bx_raw(const std::vector<CVec>& vectors, int m, int n, const CVec& x) {
  if (x.size() != m) throw std::invalid_argument("build_Bx_raw: x has wrong length");
  CMat b(static_cast<Eigen::Index>(vectors.size()), n);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    b.row(static_cast<Eigen::Index>(i)) =
        (vec_to_matrix(vectors[i], m, n).adjoint() * x).transpose();
  return b;
}

Complex det_condition(const Subspace& v, const CVec& x) {
  if (!v.family() || v.family()->kind != FamilyKind::symmetric)
    throw std::invalid_argument("det_condition: symmetric family required");
  const int m = v.m();
  if (x.size() != m) throw std::invalid_argument("det_condition: x has wrong length");
  const CMat at = v.family()->a_tilde ? *v.family()->a_tilde : default_a_tilde(m);
  const CVec xt = x.tail(m - 1);
  const Complex quad = (xt.transpose() * at.conjugate() * xt)(0, 0);
  return std::pow(x(0), m - 2) * quad;
}

namespace {

const FamilySpec& class_family(const Subspace& v) {
  if (!v.family() || (v.family()->kind != FamilyKind::symmetric &&
                      v.family()->kind != FamilyKind::general))
    throw std::invalid_argument("solution classes exist for the symmetric and general families only");
  return *v.family();
}

}  // namespace

ProductVector s1_vector(const Subspace& v, const CVec& x_tilde,
                        const CVec& kernel_coeffs, const ToleranceConfig& tol) {
  const FamilySpec& fam = class_family(v);
  const int m = fam.m, n = fam.n;
  if (x_tilde.size() != m - 1) throw std::invalid_argument("s1_vector: x_tilde length");
  if (x_tilde.norm() < kZeroNorm) throw std::invalid_argument("s1_vector: zero x_tilde");
  const CMat at = fam.a_tilde ? *fam.a_tilde : default_a_tilde(m);
  // f-tilde ranges over the Hermitian orthocomplement of A~^T x~*
  const CVec w = at.transpose() * x_tilde.conjugate();
  if (w.norm() < kZeroNorm)
    throw std::invalid_argument("s1_vector: A_tilde^T x* vanished (A_tilde singular?)");
  const std::vector<CVec> kernel = null_space(w.adjoint(), tol);
  if (kernel_coeffs.size() != static_cast<Eigen::Index>(kernel.size()))
    throw std::invalid_argument("s1_vector: kernel_coeffs must have length m-2");
  CVec ft = CVec::Zero(m - 1);
  for (std::size_t i = 0; i < kernel.size(); ++i)
    ft += kernel_coeffs(static_cast<Eigen::Index>(i)) * kernel[i];
  if (ft.norm() < kZeroNorm) throw std::invalid_argument("s1_vector: zero f_tilde");
  CVec e = CVec::Zero(m);
  e.tail(m - 1) = x_tilde;
  CVec f = CVec::Zero(n);
  f.segment(1, m - 1) = ft;
  return attach_product(v, e, f, SolutionClass::S1, "x0=0");
}

ProductVector s2_vector(const Subspace& v, Complex x0, const CVec& x_tilde,
                        const ToleranceConfig& tol) {
  const FamilySpec& fam = class_family(v);
  const int m = fam.m, n = fam.n;
  if (x_tilde.size() != m - 1) throw std::invalid_argument("s2_vector: x_tilde length");
  if (std::abs(x_tilde.sum()) > 1e-10 * std::max(1.0, x_tilde.norm()))
    throw std::invalid_argument("s2_vector: x_tilde must sum to zero");
  CVec e(m);
  e(0) = x0;
  e.tail(m - 1) = x_tilde;
  CVec f(n);
  if (fam.kind == FamilyKind::symmetric) {
    f = e;
  } else {
    if (std::abs(x_tilde(0)) < kZeroNorm)
      throw std::invalid_argument("s2_vector: general family tail needs x_1 != 0");
    const Complex t = x0 / x_tilde(0);
    f.head(m) = e;
    Complex p = 1.0;
    for (int j = m; j < n; ++j) {
      p *= t;
      f(j) = e(m - 1) * p;
    }
  }
  (void)tol;
  return attach_product(v, e, f, SolutionClass::S2, "sum x~ = 0");
}

ProductVector s3_vector(const Subspace& v, Complex x0, const CVec& mid,
                        Complex alpha, Complex beta, const ToleranceConfig& tol) {
  const FamilySpec& fam = class_family(v);
  if (fam.kind != FamilyKind::general)
    throw std::invalid_argument("s3_vector: general family only");
  const int m = fam.m, n = fam.n;
  const int mid_len = std::max(0, m - 3);
  if (mid.size() != mid_len) throw std::invalid_argument("s3_vector: mid length");
  if (mid_len > 0 && std::abs(mid.sum()) > 1e-10 * std::max(1.0, mid.norm()))
    throw std::invalid_argument("s3_vector: mid entries must sum to zero");
  CVec e = CVec::Zero(m);
  e(0) = x0;
  for (int i = 0; i < mid_len; ++i) e(2 + i) = mid(i);
  // x = (x0, 0, x2..x_{m-2}, 0); f = alpha x (+) (0,..,0,beta)
  CVec f = CVec::Zero(n);
  f.head(m) = alpha * e;
  f(n - 1) = beta;
  if (e.norm() < kZeroNorm || f.norm() < kZeroNorm)
    throw std::invalid_argument("s3_vector: zero factor");
  // for m <= 4 the constraints force x~ = 0 and the class collapses to
  // e = |0> rays; reported, not dropped
  const bool degenerate = e.tail(m - 1).norm() < kZeroNorm;
  (void)tol;
  return attach_product(v, e, f, SolutionClass::S3,
                        degenerate ? "x1=0 (degenerate: x~=0)" : "x1=0");
}

std::vector<ProductVector> enumerate_class(const SolutionClassSpec& spec,
                                           int count, Rng& rng,
                                           const ToleranceConfig& tol) {
  const Subspace v = build_family(spec.family, tol);
  const int m = spec.family.m;
  std::vector<ProductVector> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Rng r = rng.split(static_cast<std::uint64_t>(k));
    switch (spec.cls) {
      case SolutionClass::S1: {
        CVec xt = r.gaussian_vector(m - 1);
        out.push_back(s1_vector(v, xt, r.gaussian_vector(m - 2), tol));
        break;
      }
      case SolutionClass::S2: {
        CVec xt = r.gaussian_vector(m - 1);
        xt.array() -= xt.mean();
        while (std::abs(xt(0)) < 1e-3) {  // keep the tail ratio well defined
          xt = r.gaussian_vector(m - 1);
          xt.array() -= xt.mean();
        }
        out.push_back(s2_vector(v, r.cnormal(), xt, tol));
        break;
      }
      case SolutionClass::S3: {
        const int mid_len = std::max(0, m - 3);
        CVec mid = CVec::Zero(mid_len);
        if (mid_len > 0) {
          mid = r.gaussian_vector(mid_len);
          mid.array() -= mid.mean();
        }
        out.push_back(s3_vector(v, r.cnormal(), mid, r.cnormal(), r.cnormal(), tol));
        break;
      }
      case SolutionClass::generic:
        throw std::invalid_argument("enumerate_class: generic is not a class");
    }
  }
  return out;
}

CVec cofactor_solution(const CMat& b) {
  const Eigen::Index rows = b.rows(), cols = b.cols();
  if (cols != rows + 1)
    throw std::invalid_argument("cofactor_solution: B must be (n-1) x n");
  CVec y(cols);
  for (Eigen::Index i = 0; i < cols; ++i) {
    CMat sub(rows, rows);
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (j == i) continue;
      sub.col(c++) = b.col(j);
    }
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    y(i) = sign * sub.determinant();
  }
  return y;
}

std::vector<ProductVector> generic_solutions(const Subspace& v, const CVec& x,
                                             const ToleranceConfig& tol) {
  if (x.norm() < kZeroNorm)
    throw std::invalid_argument("generic_solutions: x must be nonzero");
  const CMat b = build_Bx(v, x);
  std::vector<ProductVector> out;
  if (v.dim() == v.n() - 1 &&
      numerical_rank(b, tol) == static_cast<Eigen::Index>(v.dim())) {
    const CVec y = cofactor_solution(b);
    if (y.norm() > kZeroNorm) {
      out.push_back(attach_product(v, x, y, SolutionClass::generic, "cofactor"));
      return out;
    }
  }
  for (const CVec& f : null_space(b, tol))
    out.push_back(attach_product(v, x, f, SolutionClass::generic, "null-space"));
  return out;
}

ProjectionSearch search_full_rank_projection(const Subspace& v, int trials,
                                             Rng& rng,
                                             const ToleranceConfig& tol) {
  const Eigen::Index want = std::min<Eigen::Index>(v.dim(), v.n());
  for (int t = 0; t < trials; ++t) {
    Rng r = rng.split(static_cast<std::uint64_t>(t));
    const CVec x = r.gaussian_vector(v.m());
    if (numerical_rank(local_projection(v, x), tol) == want)
      return {true, x};
  }
  return {false, CVec()};
}

}  // namespace ceswit
