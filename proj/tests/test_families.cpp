#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "families.hpp"

using namespace ceswit;

namespace {
CVec basis_vec(int m, int n, int i, int j) {
  CVec v = CVec::Zero(static_cast<Eigen::Index>(m) * n);
  v(i * n + j) = 1.0;
  return v;
}

bool in_span(const Subspace& s, const CVec& v) {
  return (s.projector() * v - v).norm() < 1e-9 * v.norm();
}
}  // namespace

TEST_CASE("symmetric family m=3 default basis") {
  Subspace v = symmetric_family(3);
  CHECK(v.dim() == 3);
  const CVec w1 = basis_vec(3, 3, 0, 1) - basis_vec(3, 3, 1, 0);
  const CVec w2 = basis_vec(3, 3, 0, 2) - basis_vec(3, 3, 2, 0);
  const CVec w3 = basis_vec(3, 3, 1, 1) + 2.0 * basis_vec(3, 3, 1, 2) +
                  basis_vec(3, 3, 2, 2);
  // stored basis is the defining list, normalized and unmixed
  CHECK(std::abs(v.basis_vector(0).dot(w1 / w1.norm())) == doctest::Approx(1.0));
  CHECK(std::abs(v.basis_vector(1).dot(w2 / w2.norm())) == doctest::Approx(1.0));
  CHECK(std::abs(v.basis_vector(2).dot(w3 / w3.norm())) == doctest::Approx(1.0));
  CHECK(v.family().has_value());
  CHECK(v.family()->kind == FamilyKind::symmetric);
}

TEST_CASE("symmetric family m=4: Psi_4 has Schmidt rank 3") {
  Subspace v = symmetric_family(4);
  CHECK(v.dim() == 4);
  CHECK(schmidt_rank(v.basis_vector(3), 4, 4) == 3);
}

TEST_CASE("symmetric family rejects bad input") {
  CHECK_THROWS_AS(symmetric_family(2), std::invalid_argument);
  CMat singular = CMat::Zero(2, 2);
  singular(0, 0) = 1.0;
  CHECK_THROWS_AS(symmetric_family(3, singular), std::invalid_argument);
}

TEST_CASE("general family structure") {
  Subspace v = general_family(3, 4);
  CHECK(v.dim() == 4);
  // fourth defining vector: |0>|2> - |1>|3>
  const std::vector<CVec> pub = family_spanning_vectors(*v.family());
  const CVec want = basis_vec(3, 4, 0, 2) - basis_vec(3, 4, 1, 3);
  CHECK((pub[3] - want).norm() == 0.0);
  CHECK(in_span(v, want));

  Subspace v35 = general_family(3, 5);
  CHECK(v35.dim() == 5);
  CHECK(is_ces(v35).is_ces);

  CHECK_THROWS_AS(general_family(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(general_family(2, 4), std::invalid_argument);
}

TEST_CASE("counterexample family") {
  Subspace v = counterexample_family(3, 4);
  CHECK(v.dim() == 3);
  const CVec w1 = basis_vec(3, 4, 0, 1) - basis_vec(3, 4, 1, 0);
  const CVec w2 = basis_vec(3, 4, 0, 2) - basis_vec(3, 4, 2, 0);
  const CVec w3 = basis_vec(3, 4, 0, 3) -
                  (basis_vec(3, 4, 1, 2) - basis_vec(3, 4, 2, 1)) / std::sqrt(2.0);
  for (const CVec* w : {&w1, &w2, &w3}) CHECK(in_span(v, *w));
  CHECK(is_ces(v).is_ces);
  CHECK(is_supported(v));

  CHECK(counterexample_family(3, 5).dim() == 4);  // n - 1

  // psi_ant: antisymmetric and orthogonal to the first block
  for (auto [m, n] : {std::pair{3, 4}, {4, 6}}) {
    const CVec ant = antisym_seed(m, n);
    const CMat a = vec_to_matrix(ant, m, n).leftCols(m);
    CHECK((a + a.transpose()).norm() < 1e-12);  // swap eigenvalue -1
    for (int i = 1; i < m; ++i) {
      const CVec psi = basis_vec(m, n, 0, i) - basis_vec(m, n, i, 0);
      CHECK(std::abs(psi.dot(ant)) < 1e-12);
    }
  }
}

TEST_CASE("footnote pair") {
  auto [first, second] = footnote_pair();
  CHECK(first.dim() + second.dim() == 12);
  const CVec dir = basis_vec(3, 4, 0, 1) - basis_vec(3, 4, 1, 0);
  CHECK(in_span(first, dir));
  // complementarity
  CHECK((first.projector() + second.projector() - CMat::Identity(12, 12)).norm() <
        1e-9);
}

TEST_CASE("every family is a supported CES (m, n <= 6)") {
  std::vector<Subspace> fams;
  for (int m = 3; m <= 6; ++m) fams.push_back(symmetric_family(m));
  for (int m = 3; m <= 5; ++m)
    for (int n = m + 1; n <= 6; ++n) {
      fams.push_back(general_family(m, n));
      fams.push_back(counterexample_family(m, n));
    }
  auto fp = footnote_pair();
  fams.push_back(fp.first);
  fams.push_back(fp.second);
  for (const Subspace& v : fams) {
    CAPTURE(v.m());
    CAPTURE(v.n());
    CAPTURE(v.dim());
    CHECK(is_ces(v).is_ces);
    CHECK(is_supported(v));
  }
}

TEST_CASE("extend_ces grows a CES one dimension at a time") {
  const CVec singlet =
      basis_vec(3, 3, 0, 1) - basis_vec(3, 3, 1, 0);
  Subspace v = make_subspace(3, 3, {singlet});
  Rng rng(23);
  Subspace w = extend_ces(v, rng);
  CHECK(w.dim() == 2);
  CHECK(is_ces(w).is_ces);
  // output contains the input
  for (const CVec& b : v.basis())
    CHECK((w.projector() * b - b).norm() < 1e-9);

  // chain to the maximal dimension
  while (w.dim() < max_ces_dim(3, 3)) {
    Rng r = rng.split(1000 + w.dim());
    w = extend_ces(w, r);
  }
  CHECK(w.dim() == 4);
  CHECK(is_ces(w).is_ces);
  CHECK_THROWS_AS(extend_ces(w, rng), std::invalid_argument);
}
