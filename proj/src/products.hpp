#pragma once

#include <string>
#include <vector>

#include "families.hpp"

namespace ceswit {

enum class SolutionClass { S1, S2, S3, generic };

std::string solution_class_name(SolutionClass c);

// A product vector e (x) f attached to a subspace V with e (x) f in V^perp.
// Construction verifies the residual; factors are stored unit-normalized.
struct ProductVector {
  CVec e;
  CVec f;
  SolutionClass cls = SolutionClass::generic;
  std::string params;   // originating parameters, for reports
  double residual = 0;  // max_i |<Psi_i | e ox f>| over V's basis
};

inline constexpr double kProductResidualTol = 1e-9;

// Normalizes, computes the residual against V and throws if it exceeds
// kProductResidualTol.
ProductVector attach_product(const Subspace& v, CVec e, CVec f,
                             SolutionClass cls, std::string params = {});

// (dim V) x n matrix whose row i is the covector y -> <Psi_i | x ox y>,
// built from V's stored basis.
CMat build_Bx(const Subspace& v, const CVec& x);

// Same construction from an explicit (unnormalized) vector list; used for
// the closed-form M(x) / N(x) determinant identities.
CMat build_Bx_raw(const std::vector<CVec>& vectors, int m, int n, const CVec& x);

// x_0^{m-2} <x~*|A~*|x~> for the symmetric family; vanishes iff B(x) is
// rank-deficient. (The determinant of the m x m system matrix is homogeneous
// of degree m, which fixes the x_0 power.)
Complex det_condition(const Subspace& v, const CVec& x);

struct SolutionClassSpec {
  FamilySpec family;
  SolutionClass cls = SolutionClass::S1;
};

// Closed-form class samples at pinned parameters. Throw on parameters that
// violate the class constraints.
ProductVector s1_vector(const Subspace& v, const CVec& x_tilde,
                        const CVec& kernel_coeffs, const ToleranceConfig& tol = {});
ProductVector s2_vector(const Subspace& v, Complex x0, const CVec& x_tilde,
                        const ToleranceConfig& tol = {});
ProductVector s3_vector(const Subspace& v, Complex x0, const CVec& mid,
                        Complex alpha, Complex beta, const ToleranceConfig& tol = {});

// Seeded samples from the stated class parametrization, each verified
// orthogonal to the family subspace.
std::vector<ProductVector> enumerate_class(const SolutionClassSpec& spec,
                                           int count, Rng& rng,
                                           const ToleranceConfig& tol = {});

// y_i = (-1)^i det(B with column i removed); B must be (n-1) x n.
CVec cofactor_solution(const CMat& b);

// Product vectors x (x) f in V^perp at the given x: the cofactor route when
// dim V = n-1 and B(x) has full row rank, the null-space route otherwise.
std::vector<ProductVector> generic_solutions(const Subspace& v, const CVec& x,
                                             const ToleranceConfig& tol = {});

struct ProjectionSearch {
  bool found = false;
  CVec witness_x;
};

// Searches for an x whose local projection of V has full rank (all basis
// vectors stay independent after projection); the span analysis is
// informative exactly when such an x exists.
ProjectionSearch search_full_rank_projection(const Subspace& v, int trials, Rng& rng,
                                     const ToleranceConfig& tol = {});

}  // namespace ceswit
