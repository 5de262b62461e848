#pragma once

#include <optional>
#include <vector>

#include "products.hpp"

namespace ceswit {

// (e, f) -> (e, f*); involutive.
ProductVector partial_conjugate(const ProductVector& p);

struct SpanReport {
  int span_dim = 0;
  std::vector<CVec> kernel_basis;
  int samples_used = 0;  // product vectors actually collected
  std::optional<std::vector<CVec>> predicted_kernel;
  std::optional<bool> kernel_match;  // projector distance <= 1e-8
  bool sufficient = false;           // samples_used >= m*n
};

inline constexpr double kKernelMatchTol = 1e-8;

// Span of the given product vectors after partial conjugation; rows are
// normalized before ranking.
SpanReport span_from_products(const std::vector<ProductVector>& prods, int m,
                              int n, const ToleranceConfig& tol = {});

// Collects product vectors in V^perp (generic draws at Gaussian x, plus all
// class enumerations when V is a constructed family, plus the x0=0 stratum
// for the counterexample family), conjugates, and reports span and kernel.
// samples <= 0 means the default 4 m n generic draws.
SpanReport span_of_PV(const Subspace& v, int samples, Rng& rng,
                      const ToleranceConfig& tol = {});

// Closed-form kernel claim: symmetric {|0>|w>, |w>|0>}; general adds
// |w>|j> for j = m..n-1. Throws for other families.
std::vector<CVec> predicted_kernel(const FamilySpec& family);

// Sampled span of conjugated S1-class vectors for the symmetric family.
int dim_span_S1_star(int m, Rng& rng, const ToleranceConfig& tol = {});

bool has_spanning_property(const Subspace& v, int samples, Rng& rng,
                           const ToleranceConfig& tol = {});

}  // namespace ceswit
