#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qplex/linalg.hpp"

using namespace qplex;

TEST_CASE("hermitian_eigen identity and projector spectra") {
  const Spectrum id = hermitian_eigen(HermitianOperator(Mat::Identity(3, 3)));
  for (int i = 0; i < 3; ++i) CHECK(id.ascending(i) == doctest::Approx(1.0));

  Mat proj = Mat::Zero(2, 2);
  proj(0, 0) = 1.0;
  const Spectrum s = hermitian_eigen(HermitianOperator(proj));
  CHECK(s.ascending(0) == doctest::Approx(0.0));
  CHECK(s.ascending(1) == doctest::Approx(1.0));
  CHECK(s.descending(0) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eigen matches the quadratic formula at d=2") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Mat h(2, 2);
    const double a = rng.gaussian(), d = rng.gaussian();
    const Complex b = rng.complex_gaussian();
    h << a, b, std::conj(b), d;
    const Spectrum s = hermitian_eigen(HermitianOperator(h));
    const double tr = a + d;
    const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(b));
    CHECK(s.ascending(0) == doctest::Approx((tr - disc) / 2).epsilon(1e-12));
    CHECK(s.ascending(1) == doctest::Approx((tr + disc) / 2).epsilon(1e-12));
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  Mat m(2, 2);
  m << 1.0, Complex(0, 1), Complex(0, 1), 1.0;
  CHECK_THROWS_AS(HermitianOperator{m}, Error);
}

TEST_CASE("hs_inner basics and the entrywise oracle") {
  CHECK(hs_inner(HermitianOperator(Mat::Identity(4, 4)),
                 HermitianOperator(Mat::Identity(4, 4))) ==
        doctest::Approx(4.0));

  Mat p = Mat::Zero(2, 2), q = Mat::Zero(2, 2);
  p(0, 0) = 1.0;
  q(1, 1) = 1.0;
  CHECK(hs_inner(HermitianOperator(p), HermitianOperator(q)) ==
        doctest::Approx(0.0));

  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    Mat g(3, 3), h(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        g(i, j) = rng.complex_gaussian();
        h(i, j) = rng.complex_gaussian();
      }
    const HermitianOperator a(Mat(g + g.adjoint()));
    const HermitianOperator b(Mat(h + h.adjoint()));
    Complex direct = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) direct += a.mat()(i, j) * b.mat()(j, i);
    CHECK(hs_inner(a, b) == doctest::Approx(direct.real()).epsilon(1e-12));
    CHECK(hs_inner(a, b) == doctest::Approx(hs_inner(b, a)));
  }
}

TEST_CASE("haar_unitary invariants") {
  const UnitaryOperator u1 = haar_unitary(1, 3);
  CHECK(std::abs(u1.mat()(0, 0)) == doctest::Approx(1.0));

  for (int d = 2; d <= 5; ++d) {
    const UnitaryOperator u = haar_unitary(d, 99);
    CHECK(unitarity_defect(u.mat()) < 1e-12);
  }

  // Products stay unitary.
  const UnitaryOperator a = haar_unitary(3, 1), b = haar_unitary(3, 2);
  CHECK(unitarity_defect(a.mat() * b.mat()) < 1e-12);

  // Determinism.
  CHECK((haar_unitary(3, 42).mat() - haar_unitary(3, 42).mat()).norm() == 0.0);
  CHECK((haar_unitary(3, 42).mat() - haar_unitary(3, 43).mat()).norm() > 1e-3);
}

TEST_CASE("haar moment E|U_00|^2 = 1/d") {
  Rng rng(7);
  const int n = 10000;
  double sum = 0.0, sum_sq = 0.0;
  for (int t = 0; t < n; ++t) {
    const double v = std::norm(haar_unitary(2, rng).mat()(0, 0));
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::abs(mean - 0.5) < 3.0 * se);
}

TEST_CASE("random_density ranks and purity") {
  Rng rng(13);
  for (int d = 2; d <= 4; ++d) {
    const DensityOperator pure = random_density(d, 1, rng);
    const double tr2 = (pure.mat() * pure.mat()).trace().real();
    const double tr3 =
        (pure.mat() * pure.mat() * pure.mat()).trace().real();
    CHECK(tr2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tr3 == doctest::Approx(1.0).epsilon(1e-12));

    const DensityOperator mixed = random_density(d, d, rng);
    const Spectrum s = hermitian_eigen(mixed.hermitian());
    CHECK(s.ascending(0) >= -1e-12);
    CHECK(s.ascending.sum() == doctest::Approx(1.0));
    CHECK((mixed.mat() * mixed.mat()).trace().real() < 1.0);
  }
  CHECK_THROWS_AS(random_density(3, 0, 1), Error);
  CHECK_THROWS_AS(random_density(3, 4, 1), Error);
}

TEST_CASE("density operator constructor enforces trace and positivity") {
  Mat bad = Mat::Identity(2, 2);
  bad(1, 1) = -0.5;
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(DensityOperator{HermitianOperator(bad)}, Error);
  CHECK_THROWS_AS(DensityOperator{HermitianOperator(Mat::Identity(2, 2))},
                  Error);  // trace 2
}

TEST_CASE("rng stream splitting is deterministic and independent") {
  Rng a(123), b(123);
  CHECK(a.next_u64() == b.next_u64());
  Rng s0 = a.derived(0), s1 = a.derived(1), s0b = b.derived(0);
  CHECK(s0.next_u64() == s0b.next_u64());
  CHECK(s0.next_u64() != s1.next_u64());
}
