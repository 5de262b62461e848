#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "witness.hpp"

using namespace ceswit;

namespace {
WitnessPair family_witness(const Subspace& v) {
  return build_witness(v, Eigen::VectorXd::Ones(v.dim()));
}
}  // namespace

TEST_CASE("build_witness basics") {
  Subspace v = symmetric_family(3);
  WitnessPair wp = family_witness(v);
  CHECK(wp.min_eig_w < 0.0);
  // support of Q equals V
  Eigen::SelfAdjointEigenSolver<CMat> es(wp.q);
  CMat supp = CMat::Zero(9, 9);
  for (int i = 0; i < 9; ++i)
    if (es.eigenvalues()(i) > 1e-9)
      supp += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  CHECK((supp - v.projector()).norm() < 1e-8);

  Subspace g = general_family(3, 5);
  WitnessPair wg = family_witness(g);
  CHECK(numerical_rank(wg.q) == 5);

  Eigen::VectorXd bad = Eigen::VectorXd::Ones(3);
  bad(1) = 0.0;
  CHECK_THROWS_AS(build_witness(v, bad), std::invalid_argument);
  CHECK_THROWS_AS(build_witness(v, Eigen::VectorXd::Ones(2)),
                  std::invalid_argument);
}

TEST_CASE("decomposability identity <e,f|Q^G|e,f> = <e,f*|Q|e,f*>") {
  WitnessPair wp = family_witness(general_family(3, 4));
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    Rng r = rng.split(t);
    const CVec e = r.unit_vector(3), f = r.unit_vector(4);
    const CVec ef = tensor(e, f), efc = tensor(e, f.conjugate());
    const double lhs = std::real(ef.dot(wp.w * ef));
    const double rhs = std::real(efc.dot(wp.q * efc));
    CHECK(std::abs(lhs - rhs) <=
          1e-10 * std::max({std::abs(lhs), std::abs(rhs), 1.0}));
  }
}

TEST_CASE("W is nonnegative on random separable states") {
  WitnessPair wp = family_witness(symmetric_family(3));
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    Rng r = rng.split(t);
    const int k = 1 + static_cast<int>(r.uniform() * 17);  // <= 2mn terms
    CMat rho = CMat::Zero(9, 9);
    double wsum = 0;
    for (int i = 0; i < k; ++i) {
      const CVec ef = tensor(r.unit_vector(3), r.unit_vector(3));
      const double wi = r.uniform() + 1e-3;
      rho += wi * ef * ef.adjoint();
      wsum += wi;
    }
    rho /= wsum;
    CHECK(std::real((wp.w * rho).trace()) >= -1e-9);
  }
}

TEST_CASE("block_positivity_min") {
  Rng rng(11);
  // constant form
  Rng r1 = rng.split(1);
  const BlockPositivityResult neg =
      block_positivity_min(-CMat::Identity(4, 4), 2, 2, 8, r1);
  CHECK(neg.value == doctest::Approx(-1.0));

  WitnessPair wp = family_witness(symmetric_family(3));
  Rng r2 = rng.split(2);
  CHECK(block_positivity_min(wp.w, 3, 3, 64, r2).value >= -1e-9);

  // subtracting a kernel projector breaks block positivity
  const auto phis = predicted_kernel(*wp.v.family());
  const CVec phi1 = phis[0] / phis[0].norm();
  Rng r3 = rng.split(3);
  const BlockPositivityResult broken = block_positivity_min(
      wp.w - 0.01 * (phi1 * phi1.adjoint()), 3, 3, 64, r3);
  CHECK(broken.value < -kSearchNegTol);
}

TEST_CASE("P_W contains the conjugated class vectors") {
  for (int variant = 0; variant < 2; ++variant) {
    Subspace v = variant == 0 ? symmetric_family(3)
                              : general_family(3, 4);
    WitnessPair wp = family_witness(v);
    Rng rng(13 + variant);
    std::vector<ProductVector> samples;
    Rng r1 = rng.split(1), r2 = rng.split(2);
    for (auto& p : enumerate_class({*v.family(), SolutionClass::S1}, 16, r1))
      samples.push_back(p);
    for (auto& p : enumerate_class({*v.family(), SolutionClass::S2}, 16, r2))
      samples.push_back(p);
    for (const ProductVector& p : samples) {
      const CVec w = tensor(p.e, p.f.conjugate());
      CHECK(std::real(w.dot(wp.w * w)) <= 1e-9);
    }
  }
}

TEST_CASE("optimality_counterexample closed form") {
  WitnessPair wp = family_witness(symmetric_family(3));
  const auto phis = predicted_kernel(*wp.v.family());
  const CVec phi1 = phis[0] / phis[0].norm();
  const CMat p = phi1 * phi1.adjoint();
  Rng rng(17);
  OptimalityCertificate cert = optimality_counterexample(wp, p, 0.01, rng);
  CHECK(cert.negative);
  CHECK(cert.strategy == "closed-form");
  CHECK(cert.value < -1e-12);
  REQUIRE(cert.closed_form.has_value());
  CHECK(std::abs(cert.value - *cert.closed_form) <= 1e-8 * std::abs(cert.value));
  CHECK(cert.u.norm() == doctest::Approx(1.0));
  CHECK(cert.v_conj.norm() == doctest::Approx(1.0));

  // eps = 0 sanity branch: W itself is block-positive on P_V
  Rng r0 = rng.split(1);
  OptimalityCertificate zero = optimality_counterexample(wp, p, 0.0, r0);
  CHECK(zero.strategy == "eps-zero");
  CHECK_FALSE(zero.negative);
  CHECK(std::abs(zero.value) <= 1e-9);

  CHECK_THROWS_AS(optimality_counterexample(wp, p, -0.1, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimality_counterexample(wp, -p, 0.1, rng),
                  std::invalid_argument);
}

TEST_CASE("verify_optimal across the family targets") {
  Rng rng(19);
  for (int variant = 0; variant < 2; ++variant) {
    Subspace v = variant == 0 ? symmetric_family(3) : general_family(3, 5);
    WitnessPair wp = family_witness(v);
    Rng r = rng.split(variant);
    const OptimalityReport rep = verify_optimal(wp, {1e-2}, 4, r);
    CHECK(rep.all_negative);
    CHECK_FALSE(rep.kernel_trivial);
    for (const auto& cell : rep.cells) CHECK(cell.negative);
  }
}

TEST_CASE("verify_optimal on a spanning CES reports a trivial kernel") {
  Rng rng(23);
  Subspace v = make_subspace(3, 3, {rng.gaussian_vector(9), rng.gaussian_vector(9)});
  WitnessPair wp = family_witness(v);
  Rng r = rng.split(1);
  const OptimalityReport rep = verify_optimal(wp, {1e-2}, 4, r);
  CHECK(rep.kernel_trivial);
  CHECK(rep.all_negative);
  CHECK(rep.note.find("spanning") != std::string::npos);
  CHECK(rep.cells.empty());
}

TEST_CASE("all_negative is invariant under rescaling the lambdas") {
  Subspace v = symmetric_family(3);
  Rng rng(29);
  const WitnessPair w1 = build_witness(v, Eigen::VectorXd::Ones(3));
  const WitnessPair w2 = build_witness(v, 3.7 * Eigen::VectorXd::Ones(3));
  Rng ra = rng.split(1), rb = rng.split(2);
  CHECK(verify_optimal(w1, {1e-2, 0.1}, 3, ra).all_negative ==
        verify_optimal(w2, {1e-2, 0.1}, 3, rb).all_negative);
}

TEST_CASE("verify_optimal validates its grid") {
  WitnessPair wp = family_witness(symmetric_family(3));
  Rng rng(31);
  CHECK_THROWS_AS(verify_optimal(wp, {}, 2, rng), std::invalid_argument);
  CHECK_THROWS_AS(verify_optimal(wp, {0.0}, 2, rng), std::invalid_argument);
}

TEST_CASE("check_necessary_form") {
  CHECK(check_necessary_form(family_witness(symmetric_family(3))));
  CHECK(check_necessary_form(family_witness(general_family(3, 4))));

  // Q supported on a product vector
  CVec prod = CVec::Zero(9);
  prod(0) = 1.0;
  Subspace ps = make_subspace(3, 3, {prod});
  CHECK_FALSE(check_necessary_form(family_witness(ps)));

  // maximally mixed Q: support is the whole space, not a CES
  std::vector<CVec> full;
  const CMat id = CMat::Identity(9, 9);
  for (int i = 0; i < 9; ++i) full.push_back(id.col(i));
  const WitnessPair mixed{Subspace(3, 3, full), Eigen::VectorXd::Ones(9) / 9.0,
                          id / 9.0, partial_transpose(id / 9.0, 3, 3), 1.0 / 9.0};
  CHECK_FALSE(check_necessary_form(mixed));
}
