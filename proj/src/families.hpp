#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subspace.hpp"

namespace ceswit {

// Unitriangular (m-1)x(m-1) matrix: ones on the diagonal, twos above.
CMat default_a_tilde(int m);

// The defining spanning vectors of a family, unnormalized, in construction
// order. For footnote_pair this is the first member's list.
std::vector<CVec> family_spanning_vectors(const FamilySpec& spec);

// m-dimensional subspace of H_m spanned by |0>|i>-|i>|0> (i=1..m-1) and the
// vectorization of 0 (+) A_tilde. Stored basis: the defining vectors,
// normalized (they are mutually orthogonal).
Subspace symmetric_family(int m, const std::optional<CMat>& a_tilde = {},
                          const ToleranceConfig& tol = {});

// n-dimensional subspace of H_{m,n} (3 <= m < n): the symmetric vectors
// embedded, plus |0>|i-2>-|1>|i-1> for i=m+1..n. The defining vectors are
// not mutually orthogonal, so the stored basis is their Gram-Schmidt
// orthonormalization (in order).
Subspace general_family(int m, int n, const ToleranceConfig& tol = {});

// (n-1)-dimensional subspace of H_{m,n} (3 <= m < n) built around an
// antisymmetric seed orthogonal to the |0>|i>-|i>|0> block.
Subspace counterexample_family(int m, int n, const ToleranceConfig& tol = {});

// The antisymmetric seed used above: (|12>-|21>)/sqrt(2), embedded in H_{m,n}.
CVec antisym_seed(int m, int n);

// The explicit 6-dimensional subspace of H_{3,4} and its orthocomplement.
std::pair<Subspace, Subspace> footnote_pair(const ToleranceConfig& tol = {});

// Builds the family named by spec (footnote_pair: first member).
Subspace build_family(const FamilySpec& spec, const ToleranceConfig& tol = {});

// One CES extension step: draws unit vectors from (span V)^perp until the
// extended span passes is_ces; throws after max_tries failures.
Subspace extend_ces(const Subspace& v, Rng& rng, const ToleranceConfig& tol = {},
                    int max_tries = 16);

}  // namespace ceswit
