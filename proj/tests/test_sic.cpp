#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qplex/sic.hpp"

using namespace qplex;

namespace {

CVec d2_tetrahedron_fiducial() {
  const double theta = std::acos(1.0 / std::sqrt(3.0));
  CVec v(2);
  v(0) = std::cos(theta / 2);
  v(1) = std::polar(std::sin(theta / 2), std::numbers::pi / 4);
  return v;
}

CVec d3_exact_fiducial() {
  CVec v(3);
  v << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

TEST_CASE("displacement operators: identity, shift, orthogonality") {
  WHGroup g2(2);
  CHECK((g2.displacement(0, 0).mat() - Mat::Identity(2, 2)).norm() < 1e-15);

  // D_{1,0} = tau^0 X = the bit flip.
  Mat x(2, 2);
  x << 0, 1, 1, 0;
  CHECK((g2.displacement(1, 0).mat() - x).norm() < 1e-15);

  WHGroup g3(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const Mat d = g3.displacement(a, b).mat();
      CHECK(unitarity_defect(d) < 1e-14);
      for (int a2 = 0; a2 < 3; ++a2)
        for (int b2 = 0; b2 < 3; ++b2) {
          const Complex tr =
              (d.adjoint() * g3.displacement(a2, b2).mat()).trace();
          if (a == a2 && b == b2)
            CHECK(std::abs(tr - Complex(3.0)) < 1e-13);
          else
            CHECK(std::abs(tr) < 1e-13);
        }
    }

  CHECK_THROWS_AS(g3.displacement(3, 0), Error);
}

TEST_CASE("apply_displacement agrees with the matrix") {
  WHGroup g(4);
  Rng rng(3);
  CVec psi = CVec::Zero(4);
  for (int i = 0; i < 4; ++i) psi(i) = rng.complex_gaussian();
  psi.normalize();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK((g.apply_displacement(a, b, psi) -
             g.displacement(a, b).mat() * psi)
                .norm() < 1e-13);
}

TEST_CASE("sic_defect on known fiducials") {
  CHECK(sic_defect(SicFiducial(d2_tetrahedron_fiducial())) < 1e-20);
  CHECK(sic_defect(SicFiducial(d3_exact_fiducial())) < 1e-20);

  CVec basis = CVec::Zero(2);
  basis(0) = 1.0;
  CHECK(sic_defect(SicFiducial(basis)) > 0.1);
}

TEST_CASE("sic_defect is phase invariant") {
  const CVec v = d2_tetrahedron_fiducial();
  const CVec w = std::polar(1.0, 1.234) * v;
  CHECK(sic_defect(SicFiducial(v)) ==
        doctest::Approx(sic_defect(SicFiducial(w))).epsilon(1e-12));
}

TEST_CASE("fiducial search succeeds for small d") {
  const FiducialSearchResult r2 = find_sic_fiducial(2, 7, 1e-16, 50);
  REQUIRE(r2.fiducial.has_value());
  CHECK(r2.best_defect < 1e-16);

  const FiducialSearchResult r3 = find_sic_fiducial(3, 7, 1e-16, 50);
  REQUIRE(r3.fiducial.has_value());
  CHECK(verify_sic(sic_from_fiducial(*r3.fiducial), 1e-10).pass);
}

TEST_CASE("unreachable tolerance yields a failure report") {
  const FiducialSearchResult r = find_sic_fiducial(2, 7, 0.0, 3);
  CHECK(!r.fiducial.has_value());
  CHECK(r.best_defect >= 0.0);
  CHECK(r.restarts_used == 3);
}

TEST_CASE("fiducial search is deterministic in the seed") {
  const FiducialSearchResult a = find_sic_fiducial(3, 99, 1e-16, 50);
  const FiducialSearchResult b = find_sic_fiducial(3, 99, 1e-16, 50);
  REQUIRE(a.fiducial.has_value());
  REQUIRE(b.fiducial.has_value());
  CHECK((a.fiducial->vec() - b.fiducial->vec()).norm() == 0.0);
}

TEST_CASE("sic_from_fiducial overlaps and resolution of identity") {
  const SicSystem s2 = sic_from_fiducial(SicFiducial(d2_tetrahedron_fiducial()));
  Mat sum = Mat::Zero(2, 2);
  for (const auto& p : s2.projectors) sum += p.mat();
  CHECK(((sum / 2.0) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
  for (std::size_t i = 0; i < s2.projectors.size(); ++i)
    for (std::size_t j = i + 1; j < s2.projectors.size(); ++j)
      CHECK(hs_inner(s2.projectors[i], s2.projectors[j]) ==
            doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const SicSystem s3 = sic_from_fiducial(SicFiducial(d3_exact_fiducial()));
  for (std::size_t i = 0; i < s3.projectors.size(); ++i)
    for (std::size_t j = i + 1; j < s3.projectors.size(); ++j)
      CHECK(hs_inner(s3.projectors[i], s3.projectors[j]) ==
            doctest::Approx(0.25).epsilon(1e-12));
  CHECK(s3.provenance == SicSystem::Provenance::kFiducial);
}

TEST_CASE("sic_from_fiducial rejects a bad fiducial") {
  CVec basis = CVec::Zero(2);
  basis(0) = 1.0;
  CHECK_THROWS_AS(sic_from_fiducial(SicFiducial(basis)), Error);
}

TEST_CASE("verify_sic flags a corrupted system") {
  SicSystem s = sic_from_fiducial(SicFiducial(d2_tetrahedron_fiducial()));
  CHECK(verify_sic(s).pass);
  CHECK(verify_sic(s).max_overlap_dev < 1e-12);

  s.projectors[1] = HermitianOperator(Mat(Mat::Identity(2, 2) / 2.0));
  const SicVerification bad = verify_sic(s);
  CHECK(!bad.pass);
  CHECK(bad.max_idempotency > 0.1);
}

TEST_CASE("quasi-sic defining equations and basis gram") {
  for (int d = 2; d <= 6; ++d) {
    const QuasiSic q = build_quasi_sic(d);
    const int n = d * d;
    REQUIRE(static_cast<int>(q.operators.size()) == n);
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(q.operators[j].mat().trace().real() - 1.0) < 1e-12);
      CHECK(std::abs(q.basis.elements[j].mat().trace().real()) < 1e-12);
      for (int k = 0; k < n; ++k) {
        const double expect_op = j == k ? 1.0 : 1.0 / (d + 1.0);
        CHECK(std::abs(hs_inner(q.operators[j], q.operators[k]) - expect_op) <
              1e-12);
        const double expect_basis = j == k ? 1.0 : -1.0 / (n - 1.0);
        CHECK(std::abs(hs_inner(q.basis.elements[j], q.basis.elements[k]) -
                       expect_basis) < 1e-12);
      }
    }
    CHECK(verify_quasi_sic(q).pass);
  }
}

TEST_CASE("quasi-sic is genuine at d=2 and non-positive at d=4") {
  CHECK(verify_quasi_sic(build_quasi_sic(2)).min_eigenvalue > -1e-10);
  CHECK(verify_quasi_sic(build_quasi_sic(4)).min_eigenvalue < -1e-3);
}

TEST_CASE("triple products: diagonal values and full symmetry") {
  const SicSystem s = sic_from_fiducial(SicFiducial(d3_exact_fiducial()));
  const TripleProducts c = triple_products(s);
  const int n = 9;
  for (int i = 0; i < n; ++i) {
    CHECK(c(i, i, i) == doctest::Approx(1.0).epsilon(1e-10));
    for (int j = 0; j < n; ++j)
      if (j != i) CHECK(c(i, i, j) == doctest::Approx(0.25).epsilon(1e-10));
  }
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const int i = static_cast<int>(rng.next_u64() % n);
    const int j = static_cast<int>(rng.next_u64() % n);
    const int k = static_cast<int>(rng.next_u64() % n);
    CHECK(c(i, j, k) == c(k, i, j));
    CHECK(c(i, j, k) == c(j, i, k));
    CHECK(c(i, j, k) == c(k, j, i));
  }
}
