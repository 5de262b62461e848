#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rng.hpp"

namespace ceswit {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Norms below this count as the zero vector.
inline constexpr double kZeroNorm = 1e-12;

// Numerical thresholds used throughout. rank_rel is a relative singular
// value cutoff; orth_tol bounds orthogonality residuals; neg_tol is the
// threshold below which an analytically computed value counts as negative.
struct ToleranceConfig {
  double rank_rel = 1e-9;
  double orth_tol = 1e-10;
  double neg_tol = 1e-12;

  void validate() const {
    if (!(rank_rel > 0.0 && rank_rel < 1.0))
      throw std::invalid_argument("ToleranceConfig: rank_rel must be in (0,1)");
    if (!(orth_tol > 0.0) || !(neg_tol > 0.0))
      throw std::invalid_argument("ToleranceConfig: tolerances must be positive");
  }
};

// Bipartite vector <-> m x n matrix, row-major: entry (i,j) is the
// coefficient of |i>|j>.
CMat vec_to_matrix(const CVec& psi, Eigen::Index m, Eigen::Index n);
CVec matrix_to_vec(const CMat& a);

// e (x) f, laid out so that vec_to_matrix(tensor(e,f), m, n) = e f^T.
CVec tensor(const CVec& e, const CVec& f);

// Number of singular values above rank_rel * sigma_max; 0 for a zero matrix.
Eigen::Index numerical_rank(const CMat& mat, const ToleranceConfig& tol = {});

// Orthonormal kernel basis; ||M v|| <= orth_tol * ||M|| for each vector.
std::vector<CVec> null_space(const CMat& mat, const ToleranceConfig& tol = {});

// Transpose on the second tensor factor: each n x n block is transposed
// in place. Involutive.
CMat partial_transpose(const CMat& mat, Eigen::Index m, Eigen::Index n);

// numerical_rank of vec_to_matrix(psi); throws on the zero vector.
Eigen::Index schmidt_rank(const CVec& psi, Eigen::Index m, Eigen::Index n,
                          const ToleranceConfig& tol = {});

// Two-pass modified Gram-Schmidt. Drops dependent directions when
// require_independent is false, throws otherwise.
std::vector<CVec> orthonormalize(const std::vector<CVec>& vectors,
                                 const ToleranceConfig& tol,
                                 bool require_independent);

// Haar-ish random unitary from the QR of a Gaussian matrix.
CMat random_unitary(Eigen::Index dim, Rng& rng);

}  // namespace ceswit
