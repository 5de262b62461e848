#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spanning.hpp"

using namespace ceswit;

namespace {
CVec basis_vec(int m, int n, int i, int j) {
  CVec v = CVec::Zero(static_cast<Eigen::Index>(m) * n);
  v(i * n + j) = 1.0;
  return v;
}

CMat projector_of(const std::vector<CVec>& vs) {
  auto basis = orthonormalize(vs, {}, false);
  CMat p = CMat::Zero(vs.front().size(), vs.front().size());
  for (const CVec& b : basis) p += b * b.adjoint();
  return p;
}
}  // namespace

TEST_CASE("partial_conjugate") {
  Subspace v = symmetric_family(3);
  Rng rng(3);
  CVec xt(2);
  xt << 1.0, -1.0;
  ProductVector p = s2_vector(v, Complex(0, 1), xt);
  ProductVector q = partial_conjugate(p);
  CHECK((q.e - p.e).norm() == 0.0);
  CHECK((q.f - p.f.conjugate()).norm() == 0.0);
  ProductVector r = partial_conjugate(q);
  CHECK((r.f - p.f).norm() == 0.0);  // involution
  // real second factor is a fixed point
  ProductVector s = s2_vector(v, 1.0, xt);
  CHECK((partial_conjugate(s).f - s.f).norm() == 0.0);
}

TEST_CASE("span_of_PV on the symmetric family") {
  for (int m : {3, 4}) {
    Subspace v = symmetric_family(m);
    Rng rng(100 + m);
    const SpanReport rep = span_of_PV(v, 0, rng);
    CHECK(rep.span_dim == m * m - 2);
    CHECK(static_cast<int>(rep.kernel_basis.size()) == 2);
    REQUIRE(rep.kernel_match.has_value());
    CHECK(*rep.kernel_match);
    CHECK(rep.sufficient);
  }
}

TEST_CASE("span_of_PV on the general family, m >= 4") {
  Subspace v = general_family(4, 5);
  Rng rng(7);
  const SpanReport rep = span_of_PV(v, 0, rng);
  CHECK(static_cast<int>(rep.kernel_basis.size()) == 3);  // n - m + 2
  CHECK(rep.kernel_match.value_or(false));
}

TEST_CASE("span_of_PV on the general family, m = 3 keeps one extra direction") {
  // For m = 3 the sampled kernel strictly contains the predicted one: the S2
  // tail degenerates (f_3 = -x_0 exactly), which protects |1>(|0> + |3>).
  Subspace v = general_family(3, 4);
  Rng rng(11);
  const SpanReport rep = span_of_PV(v, 0, rng);
  CHECK(static_cast<int>(rep.kernel_basis.size()) == 4);  // n - m + 3
  REQUIRE(rep.kernel_match.has_value());
  CHECK_FALSE(*rep.kernel_match);
  // ...but every predicted vector is still in the sampled kernel
  const CMat pk = projector_of(rep.kernel_basis);
  for (const CVec& phi : *rep.predicted_kernel)
    CHECK((pk * phi - phi).norm() < 1e-8 * phi.norm());
  CVec rogue = basis_vec(3, 4, 1, 0) + basis_vec(3, 4, 1, 3);
  CHECK((pk * rogue - rogue).norm() < 1e-8 * rogue.norm());
}

TEST_CASE("span_of_PV on the counterexample family") {
  Subspace v = counterexample_family(3, 4);
  Rng rng(13);
  const SpanReport rep = span_of_PV(v, 0, rng);
  CHECK(rep.span_dim == 11);
  REQUIRE(rep.kernel_basis.size() == 1);
  const CVec target = basis_vec(3, 4, 0, 3);
  CHECK(std::abs(rep.kernel_basis[0].dot(target)) == doctest::Approx(1.0));
  CHECK_FALSE(rep.kernel_match.has_value());  // no closed-form prediction
}

TEST_CASE("span_of_PV reports an empty P_V honestly") {
  auto fp = footnote_pair();
  Rng rng(17);
  const SpanReport rep = span_of_PV(fp.first, 0, rng);
  CHECK(rep.span_dim == 0);
  CHECK(rep.samples_used == 0);
  CHECK_FALSE(rep.sufficient);
  CHECK(rep.kernel_basis.size() == 12);
}

TEST_CASE("predicted_kernel") {
  const auto sym = predicted_kernel(FamilySpec{FamilyKind::symmetric, 3, 3, {}});
  REQUIRE(sym.size() == 2);
  const CVec phi1 = basis_vec(3, 3, 0, 1) + basis_vec(3, 3, 0, 2);
  const CVec phi2 = basis_vec(3, 3, 1, 0) + basis_vec(3, 3, 2, 0);
  CHECK((sym[0] - phi1).norm() == 0.0);
  CHECK((sym[1] - phi2).norm() == 0.0);

  CHECK(predicted_kernel(FamilySpec{FamilyKind::general, 3, 5, {}}).size() == 4);

  try {
    predicted_kernel(FamilySpec{FamilyKind::counterexample, 3, 4, {}});
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("|0>|n-1>") != std::string::npos);
  }
}

TEST_CASE("dim_span_S1_star") {
  Rng rng(19);
  CHECK(dim_span_S1_star(3, rng) == 4);
  CHECK(dim_span_S1_star(4, rng) == 9);
  CHECK(dim_span_S1_star(5, rng) == 16);
}

TEST_CASE("has_spanning_property") {
  Rng rng(23);
  // random 2-dim CES in H_3 spans after conjugation
  Subspace v = make_subspace(3, 3, {rng.gaussian_vector(9), rng.gaussian_vector(9)});
  Rng r1 = rng.split(1);
  CHECK(has_spanning_property(v, 0, r1));

  Rng r2 = rng.split(2);
  CHECK_FALSE(has_spanning_property(symmetric_family(3), 0, r2));

  // H_{2,n}: every CES spans
  Subspace h2 = make_subspace(2, 3, {rng.gaussian_vector(6), rng.gaussian_vector(6)});
  Rng r3 = rng.split(3);
  CHECK(has_spanning_property(h2, 0, r3));
}

TEST_CASE("span_dim stabilizes when samples double") {
  Rng rng(29);
  for (int i = 0; i < 3; ++i) {
    Subspace v = i == 0   ? symmetric_family(3)
                 : i == 1 ? general_family(4, 5)
                          : counterexample_family(3, 4);
    Rng ra = rng.split(2 * i), rb = rng.split(2 * i + 1);
    const int base = span_of_PV(v, 4 * v.m() * v.n(), ra, {}).span_dim;
    const int doubled = span_of_PV(v, 8 * v.m() * v.n(), rb, {}).span_dim;
    CHECK(base == doubled);
  }
}

TEST_CASE("kernel vectors annihilate fresh conjugated solutions") {
  Subspace v = symmetric_family(4);
  Rng rng(31);
  const SpanReport rep = span_of_PV(v, 0, rng);
  Rng fresh = rng.split(777);
  int checked = 0;
  Rng r1 = fresh.split(1), r2 = fresh.split(2);
  std::vector<ProductVector> more;
  for (auto& p : enumerate_class({*v.family(), SolutionClass::S1}, 32, r1))
    more.push_back(p);
  for (auto& p : enumerate_class({*v.family(), SolutionClass::S2}, 32, r2))
    more.push_back(p);
  for (const ProductVector& p : more) {
    const CVec w = tensor(p.e, p.f.conjugate()).normalized();
    for (const CVec& k : rep.kernel_basis) CHECK(std::abs(k.dot(w)) <= 1e-8);
    ++checked;
  }
  CHECK(checked == 64);
}

TEST_CASE("spanning status is invariant under local invertible maps") {
  Rng rng(37);
  // spanning case: random 2-dim CES in H_3, re-sampled after the map
  Subspace v = make_subspace(3, 3, {rng.gaussian_vector(9), rng.gaussian_vector(9)});
  for (int t = 0; t < 10; ++t) {
    Rng r = rng.split(100 + t);
    const CMat a = r.gaussian_matrix(3, 3), b = r.gaussian_matrix(3, 3);
    CMat ab = CMat::Zero(9, 9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ab.block(i * 3, j * 3, 3, 3) = a(i, j) * b;
    std::vector<CVec> mapped;
    for (const CVec& w : v.basis()) mapped.push_back(ab * w);
    Subspace tv = make_subspace(3, 3, mapped);
    Rng rs = r.split(5);
    CHECK(has_spanning_property(tv, 0, rs));
  }
  // non-spanning case: map the class samples through (A^-dagger, B^-dagger)
  Subspace sym = symmetric_family(3);
  Rng rc = rng.split(999);
  std::vector<ProductVector> samples;
  Rng c1 = rc.split(1), c2 = rc.split(2);
  for (auto& p : enumerate_class({*sym.family(), SolutionClass::S1}, 24, c1))
    samples.push_back(p);
  for (auto& p : enumerate_class({*sym.family(), SolutionClass::S2}, 24, c2))
    samples.push_back(p);
  const int want = span_from_products(samples, 3, 3).span_dim;
  CHECK(want == 7);
  for (int t = 0; t < 10; ++t) {
    Rng r = rng.split(200 + t);
    const CMat a = r.gaussian_matrix(3, 3), b = r.gaussian_matrix(3, 3);
    const CMat ia = a.adjoint().inverse(), ib = b.adjoint().inverse();
    std::vector<ProductVector> mapped;
    for (const ProductVector& p : samples) {
      ProductVector q = p;
      q.e = ia * p.e;
      q.f = ib * p.f;
      mapped.push_back(q);
    }
    CHECK(span_from_products(mapped, 3, 3).span_dim == want);
  }
}
