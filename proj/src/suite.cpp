#include "suite.hpp"

#include <sstream>

#include "witness.hpp"

namespace ceswit {

namespace {

struct Check {
  std::ostringstream detail;
  bool pass = true;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAIL[" << what << "] ";
    }
  }
  void note(const std::string& s) { detail << s; }
};

std::vector<std::pair<std::string, Subspace>> all_families(const ToleranceConfig& tol) {
  std::vector<std::pair<std::string, Subspace>> out;
  for (int m = 3; m <= 6; ++m)
    out.emplace_back("symmetric m=" + std::to_string(m), symmetric_family(m, {}, tol));
  for (auto [m, n] : {std::pair{3, 4}, {3, 5}, {4, 5}, {4, 6}})
    out.emplace_back("general (" + std::to_string(m) + "," + std::to_string(n) + ")",
                     general_family(m, n, tol));
  for (auto [m, n] : {std::pair{3, 4}, {3, 5}, {4, 5}})
    out.emplace_back("counterexample (" + std::to_string(m) + "," + std::to_string(n) + ")",
                     counterexample_family(m, n, tol));
  auto fp = footnote_pair(tol);
  out.emplace_back("footnote member 0", fp.first);
  out.emplace_back("footnote member 1", fp.second);
  return out;
}

Subspace random_subspace(int m, int n, int dim, Rng& rng,
                         const ToleranceConfig& tol) {
  std::vector<CVec> vs;
  for (int i = 0; i < dim; ++i) vs.push_back(rng.gaussian_vector(m * n));
  return make_subspace(m, n, vs, tol);
}

CriterionResult c1_ces_certificates(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  for (auto& [name, sub] : all_families(tol)) {
    CesSearchOptions opts;
    opts.seed = seed;
    const CesCertificate cert = is_ces(sub, tol, opts);
    c.expect(cert.is_ces && cert.best_product_overlap < 1.0 - 1e-6,
             name + " overlap=" + std::to_string(cert.best_product_overlap));
  }
  return {"C1", "family CES certificates", c.pass, c.detail.str()};
}

CriterionResult c2_kernels(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  for (int m = 3; m <= 6; ++m) {
    Rng rng(seed + m);
    const SpanReport rep = span_of_PV(symmetric_family(m, {}, tol), 0, rng, tol);
    const int kd = static_cast<int>(rep.kernel_basis.size());
    c.expect(kd == 2, "symmetric m=" + std::to_string(m) + " kernel dim " +
                          std::to_string(kd));
    c.expect(rep.kernel_match.value_or(false),
             "symmetric m=" + std::to_string(m) + " kernel match");
  }
  for (auto [m, n] : {std::pair{3, 4}, {3, 5}, {4, 5}, {4, 6}}) {
    Rng rng(seed + 16 * m + n);
    const SpanReport rep = span_of_PV(general_family(m, n, tol), 0, rng, tol);
    const int kd = static_cast<int>(rep.kernel_basis.size());
    const std::string tag =
        "general (" + std::to_string(m) + "," + std::to_string(n) + ")";
    c.expect(kd == n - m + 2,
             tag + " kernel dim " + std::to_string(kd) + " want " +
                 std::to_string(n - m + 2));
    c.expect(rep.kernel_match.value_or(false), tag + " kernel match");
  }
  if (!c.pass)
    c.note(" [known: for m=3 the S2 class forces the tail entry f_3 = -x_0, so "
           "its span loses one direction and the sampled kernel keeps the extra "
           "vector |1>(|0>+|m>)]");
  return {"C2", "kernel dimensions and predicted kernels", c.pass, c.detail.str()};
}

CriterionResult c3_s1_span(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  for (int m : {3, 4, 5}) {
    Rng rng(seed + 100 + m);
    const int d = dim_span_S1_star(m, rng, tol);
    c.expect(d == (m - 1) * (m - 1),
             "m=" + std::to_string(m) + " got " + std::to_string(d));
  }
  return {"C3", "dim span S1* = (m-1)^2", c.pass, c.detail.str()};
}

CriterionResult c4_counterexample_kernel(std::uint64_t seed,
                                         const ToleranceConfig& tol) {
  Check c;
  for (auto [m, n] : {std::pair{3, 4}, {3, 5}}) {
    Rng rng(seed + 200 + n);
    const SpanReport rep = span_of_PV(counterexample_family(m, n, tol), 0, rng, tol);
    CVec target = CVec::Zero(static_cast<Eigen::Index>(m) * n);
    target(n - 1) = 1.0;  // |0>|n-1>
    // residual of |0,n-1> against the sampled span = norm of its projection
    CVec inside = CVec::Zero(target.size());
    for (const CVec& k : rep.kernel_basis) inside += k * k.dot(target);
    const double res = (target - inside).norm();
    c.expect(res <= 1e-8, "(" + std::to_string(m) + "," + std::to_string(n) +
                              ") residual " + std::to_string(res));
  }
  return {"C4", "counterexample kernel contains |0>|n-1>", c.pass, c.detail.str()};
}

CriterionResult c5_witness_validity(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  for (auto& [name, sub] : all_families(tol)) {
    const WitnessPair wp =
        build_witness(sub, Eigen::VectorXd::Ones(sub.dim()), tol);
    c.expect(wp.min_eig_w < -1e-6,
             name + " min_eig_W=" + std::to_string(wp.min_eig_w));
    Rng rng(seed + 300);
    const BlockPositivityResult bp =
        block_positivity_min(wp.w, sub.m(), sub.n(), 64, rng, tol);
    c.expect(bp.value >= -1e-9, name + " block min " + std::to_string(bp.value));
  }
  return {"C5", "family witnesses: NPT and block positivity", c.pass, c.detail.str()};
}

// Eq.(26)-shaped scalar form for a symmetric-family closed-form cell with
// rank-1 P = |chi><chi|, evaluated on the certificate's normalized (u, v*).
double eq26_value(const WitnessPair& wp, const CVec& chi, double eps,
                  const CVec& u) {
  const FamilySpec& fam = *wp.v.family();
  const int m = fam.m;
  const CMat at = fam.a_tilde ? *fam.a_tilde : default_a_tilde(m);
  CMat am = CMat::Zero(m, m);
  am.block(1, 1, m - 1, m - 1) = at;
  const double psi_m_norm2 = am.squaredNorm();
  const Complex eta = u.tail(m - 1).sum();
  const Complex u0 = u(0);
  const std::vector<CVec> phis = predicted_kernel(fam);
  const double wnorm = std::sqrt(static_cast<double>(m - 1));
  const Complex a1 = (phis[0] / wnorm).dot(chi);
  const Complex a2 = (phis[1] / wnorm).dot(chi);
  const Complex amp = std::conj(a1) * u0 * std::conj(eta) +
                      std::conj(a2) * eta * std::conj(u0);
  const double lam_m = wp.lambdas(wp.v.dim() - 1);
  return lam_m * std::norm(eta * eta) / psi_m_norm2 -
         eps * std::norm(amp) / (m - 1);
}

CriterionResult c6_optimality(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  const std::vector<double> eps_grid{1e-3, 1e-2, 0.1};
  std::vector<std::pair<std::string, Subspace>> targets;
  targets.emplace_back("symmetric m=3", symmetric_family(3, {}, tol));
  targets.emplace_back("symmetric m=4", symmetric_family(4, {}, tol));
  targets.emplace_back("general (3,4)", general_family(3, 4, tol));
  targets.emplace_back("general (3,5)", general_family(3, 5, tol));
  for (auto& [name, sub] : targets) {
    const WitnessPair wp =
        build_witness(sub, Eigen::VectorXd::Ones(sub.dim()), tol);
    Rng rng(seed + 400);
    const OptimalityReport rep = verify_optimal(wp, eps_grid, 10, rng, tol);
    c.expect(rep.all_negative, name + " all_negative");
    for (const auto& cell : rep.cells) {
      c.expect(cell.value < -1e-12,
               name + " " + cell.p_desc + " eps=" + std::to_string(cell.eps) +
                   " value=" + std::to_string(cell.value));
      if (cell.strategy == "closed-form" && cell.closed_form) {
        const double rel = std::abs(cell.value - *cell.closed_form) /
                           std::max(std::abs(cell.value), 1e-300);
        c.expect(rel <= 1e-8, name + " " + cell.p_desc + " closed-form rel " +
                                  std::to_string(rel));
      }
    }
    // Eq.(26) literal scalar form on symmetric kernel-projector cells
    if (sub.family()->kind == FamilyKind::symmetric) {
      for (std::size_t i = 0; i < rep.kernel.size(); ++i) {
        for (const auto& cell : rep.cells) {
          if (cell.strategy != "closed-form") continue;
          if (cell.p_desc != "kernel-projector-" + std::to_string(i)) continue;
          const double want = eq26_value(wp, rep.kernel[i], cell.eps, cell.u);
          const double rel = std::abs(cell.value - want) /
                             std::max(std::abs(cell.value), 1e-300);
          c.expect(rel <= 1e-8,
                   name + " Eq26 " + cell.p_desc + " rel " + std::to_string(rel));
        }
      }
    }
  }
  return {"C6", "witness optimality certificates", c.pass, c.detail.str()};
}

CriterionResult c7_random_ces_spanning(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  for (int n : {3, 4}) {
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
      Rng rng(seed + 500 + 64 * n + trial);
      const Subspace v = random_subspace(n, n, n - 1, rng, tol);
      CesSearchOptions opts;
      opts.seed = rng.split(1).seed();
      if (!is_ces(v, tol, opts).is_ces) continue;  // measure-zero; skip honestly
      Rng ra = rng.split(2);
      if (!search_full_rank_projection(v, 20, ra, tol).found) continue;
      Rng rs = rng.split(3);
      c.expect(has_spanning_property(v, 0, rs, tol),
               "n=" + std::to_string(n) + " trial " + std::to_string(trial));
      ++checked;
    }
    // random draws are generically eligible; a pile of skips means a bug
    c.expect(checked >= 15, "n=" + std::to_string(n) + " only " +
                                std::to_string(checked) + " trials eligible");
    // cofactor route vs null-space route, 100 random x
    Rng rng(seed + 550 + n);
    const Subspace v = random_subspace(n, n, n - 1, rng, tol);
    for (int k = 0; k < 100; ++k) {
      Rng r = rng.split(1000 + k);
      const CVec x = r.gaussian_vector(n);
      const CMat b = build_Bx(v, x);
      if (numerical_rank(b, tol) != n - 1) continue;
      const CVec y1 = cofactor_solution(b).normalized();
      const std::vector<CVec> ker = null_space(b, tol);
      c.expect(ker.size() == 1, "unique kernel n=" + std::to_string(n));
      const double align = std::abs(ker.front().dot(y1));
      c.expect(align >= 1.0 - 1e-9,
               "cofactor ray n=" + std::to_string(n) + " align " +
                   std::to_string(align));
    }
  }
  return {"C7", "random (n-1)-dim CES spanning + cofactor solutions", c.pass,
          c.detail.str()};
}

CriterionResult c8_dim3_h4(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Rng rng(seed + 600 + trial);
    const int dim = 1 + trial % 3;
    const Subspace v = random_subspace(4, 4, dim, rng, tol);
    if (!is_supported(v, tol)) continue;
    CesSearchOptions opts;
    opts.seed = rng.split(1).seed();
    if (!is_ces(v, tol, opts).is_ces) continue;
    Rng rs = rng.split(2);
    c.expect(has_spanning_property(v, 0, rs, tol),
             "trial " + std::to_string(trial) + " dim " + std::to_string(dim));
    ++checked;
  }
  c.expect(checked >= 15,
           "only " + std::to_string(checked) + " trials eligible");
  return {"C8", "CESs of dim <= 3 in H_4 span", c.pass, c.detail.str()};
}

CriterionResult c9_extension_chains(std::uint64_t seed, const ToleranceConfig& tol) {
  Check c;
  for (auto [m, n] : {std::pair{3, 3}, {3, 4}, {4, 4}}) {
    Rng rng(seed + 700 + 8 * m + n);
    Subspace v = random_subspace(m, n, 1, rng, tol);
    CesSearchOptions opts;
    opts.seed = rng.split(77).seed();
    c.expect(is_ces(v, tol, opts).is_ces, "seed CES");
    const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    try {
      int step = 0;
      while (v.dim() < max_ces_dim(m, n)) {
        Rng r = rng.split(800 + step++);
        v = extend_ces(v, r, tol, 16);
        CesSearchOptions o2;
        o2.seed = r.split(9).seed();
        c.expect(is_ces(v, tol, o2).is_ces,
                 tag + " step " + std::to_string(step) + " certificate");
      }
      c.expect(v.dim() == max_ces_dim(m, n), tag + " reached max");
    } catch (const std::exception& e) {
      c.expect(false, tag + std::string(" exception: ") + e.what());
    }
  }
  return {"C9", "CES extension chains to maximal dimension", c.pass, c.detail.str()};
}

CriterionResult c10_structural_identities(std::uint64_t seed,
                                          const ToleranceConfig& tol) {
  Check c;
  // det N(x) = det M(x) * (-x_1)^{n-m} on the raw defining vectors
  for (auto [m, n] : {std::pair{3, 5}, {4, 6}}) {
    const FamilySpec gen{FamilyKind::general, m, n, default_a_tilde(m)};
    const FamilySpec sym{FamilyKind::symmetric, m, m, default_a_tilde(m)};
    const std::vector<CVec> nvecs = family_spanning_vectors(gen);
    const std::vector<CVec> mvecs = family_spanning_vectors(sym);
    Rng rng(seed + 900 + n);
    for (int k = 0; k < 100; ++k) {
      const CVec x = rng.split(k).gaussian_vector(m);
      const Complex dn = build_Bx_raw(nvecs, m, n, x).determinant();
      const Complex dm = build_Bx_raw(mvecs, m, m, x).determinant();
      const Complex want = dm * std::pow(-x(1), n - m);
      const double rel = std::abs(dn - want) / std::max(std::abs(dn), 1e-300);
      c.expect(rel <= 1e-9, "detN (" + std::to_string(m) + "," + std::to_string(n) +
                                ") rel " + std::to_string(rel));
    }
  }
  // <e,f|Q^G|e,f> = <e,f*|Q|e,f*>
  const Subspace sub = general_family(3, 4, tol);
  const WitnessPair wp = build_witness(sub, Eigen::VectorXd::Ones(sub.dim()), tol);
  Rng rng(seed + 950);
  for (int k = 0; k < 200; ++k) {
    Rng r = rng.split(k);
    const CVec e = r.unit_vector(3);
    const CVec f = r.unit_vector(4);
    const CVec ef = tensor(e, f);
    const CVec efc = tensor(e, f.conjugate());
    const double lhs = std::real(ef.dot(wp.w * ef));
    const double rhs = std::real(efc.dot(wp.q * efc));
    const double rel = std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    c.expect(rel <= 1e-10, "transpose identity rel " + std::to_string(rel));
  }
  return {"C10", "structural identities", c.pass, c.detail.str()};
}

}  // namespace

SuiteReport run_acceptance_suite(std::uint64_t seed, const ToleranceConfig& tol) {
  tol.validate();
  SuiteReport rep;
  rep.seed = seed;
  using Criterion = CriterionResult (*)(std::uint64_t, const ToleranceConfig&);
  const std::pair<const char*, Criterion> criteria[] = {
      {"C1", &c1_ces_certificates}, {"C2", &c2_kernels},
      {"C3", &c3_s1_span},          {"C4", &c4_counterexample_kernel},
      {"C5", &c5_witness_validity}, {"C6", &c6_optimality},
      {"C7", &c7_random_ces_spanning},         {"C8", &c8_dim3_h4},
      {"C9", &c9_extension_chains}, {"C10", &c10_structural_identities},
  };
  for (const auto& [id, fn] : criteria) {
    try {
      rep.criteria.push_back(fn(seed, tol));
    } catch (const std::exception& e) {
      rep.criteria.push_back(
          {id, "criterion aborted", false, std::string("exception: ") + e.what()});
    }
  }
  rep.all_pass = true;
  for (const auto& cr : rep.criteria) rep.all_pass = rep.all_pass && cr.pass;
  return rep;
}

}  // namespace ceswit
