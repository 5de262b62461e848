#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spanning.hpp"

namespace ceswit {

// Search-found negativity threshold (closed-form values use
// ToleranceConfig::neg_tol, which is tighter).
inline constexpr double kSearchNegTol = 1e-9;

// Q = sum_i lambda_i |Psi_i><Psi_i| over V's stored basis, W = Q^Gamma.
struct WitnessPair {
  Subspace v;
  Eigen::VectorXd lambdas;
  CMat q;
  CMat w;
  double min_eig_w = 0.0;
};

WitnessPair build_witness(const Subspace& v, const Eigen::VectorXd& lambdas,
                          const ToleranceConfig& tol = {});

struct BlockPositivityResult {
  double value = 0.0;
  CVec e;
  CVec f;
};

// Multi-start alternating minimization of <e,f|W|e,f> over unit products.
BlockPositivityResult block_positivity_min(const CMat& w, int m, int n,
                                           int starts, Rng& rng,
                                           const ToleranceConfig& tol = {});

struct OptimalityCertificate {
  std::string p_desc;
  double eps = 0.0;
  CVec u;        // first factor, unit norm
  CVec v_conj;   // second factor of the tested vector u (x) v*, unit norm
  double value = 0.0;           // <u,v*| W - eps P |u,v*>
  std::string strategy;         // "closed-form", "search", "eps-zero"
  std::optional<double> closed_form;  // scalar-route value for closed-form cells
  bool negative = false;
};

// Produces a product vector with <u,v*|W - eps P|u,v*> < 0. Strategy A uses
// the family closed forms; strategy B falls back to the block-positivity
// search on W - eps P. A failed search is reported, never silently passed.
OptimalityCertificate optimality_counterexample(const WitnessPair& wp,
                                                const CMat& p, double eps,
                                                Rng& rng,
                                                const ToleranceConfig& tol = {});

struct OptimalityReport {
  std::vector<CVec> kernel;  // K = (span P_V)^perp as sampled
  std::vector<OptimalityCertificate> cells;
  bool all_negative = false;
  bool kernel_trivial = false;
  std::string note;
};

// Runs optimality_counterexample over every (eps, P) cell with P ranging
// over kernel-basis projectors and `trials` random PSD matrices on K.
OptimalityReport verify_optimal(const WitnessPair& wp,
                                const std::vector<double>& eps_grid, int trials,
                                Rng& rng, const ToleranceConfig& tol = {});

// Q PSD, W = Q^Gamma, and the support of Q is a CES.
bool check_necessary_form(const WitnessPair& wp, const ToleranceConfig& tol = {});

}  // namespace ceswit
