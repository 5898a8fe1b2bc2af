#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "clg/expm.hpp"
#include "clg/rng.hpp"
#include "test_util.hpp"

using namespace clg;
using namespace clg::testutil;

TEST_CASE("expm of zero is the identity, exactly") {
  ExpmResult r = expm(Matrix(3, 3));
  CHECK(r.value == Matrix::identity(3));
  CHECK(r.scaling_exponent == 0);
  CHECK(r.pade_order == 3);
}

TEST_CASE("expm of a diagonal matrix is entrywise exp") {
  Matrix a(2, 2);
  a(0, 0) = 0.3;
  a(1, 1) = -1.7;
  Matrix e = expm(a).value;
  CHECK(e(0, 0) == doctest::Approx(std::exp(0.3)).epsilon(1e-14));
  CHECK(e(1, 1) == doctest::Approx(std::exp(-1.7)).epsilon(1e-14));
  CHECK(e(0, 1) == 0.0);
  CHECK(e(1, 0) == 0.0);
}

TEST_CASE("expm of a planar rotation generator") {
  const double theta = 0.7;
  Matrix a(2, 2, {0, -theta, theta, 0});
  Matrix e = expm(a).value;
  CHECK(e(0, 0) == doctest::Approx(std::cos(theta)).epsilon(1e-14));
  CHECK(e(0, 1) == doctest::Approx(-std::sin(theta)).epsilon(1e-14));
  CHECK(e(1, 0) == doctest::Approx(std::sin(theta)).epsilon(1e-14));
  CHECK(e(1, 1) == doctest::Approx(std::cos(theta)).epsilon(1e-14));
}

TEST_CASE("expm matches the Taylor oracle on random 6x6") {
  Rng rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a = random_matrix(6, 6, rng, 1.0 / 6.0);  // ||A||_1 around or below 1
    CHECK(rel_frob_err(expm(a).value, taylor_expm(a)) <= 1e-12);
  }
}

TEST_CASE("expm uses higher orders and squaring as the norm grows") {
  Rng rng(102);
  Matrix a = random_matrix(5, 5, rng, 3.0);
  ExpmResult r = expm(a);
  CHECK(r.pade_order == 13);
  CHECK(r.scaling_exponent > 0);
  CHECK(rel_frob_err(r.value, taylor_expm(a)) <= 1e-10);
}

TEST_CASE("expm rejects bad input") {
  CHECK_THROWS_AS(expm(Matrix(2, 3)), std::runtime_error);
  Matrix nan2(2, 2);
  nan2(0, 0) = std::nan("");
  CHECK_THROWS_AS(expm(nan2), std::runtime_error);
  Matrix big(2, 2);
  big(0, 0) = 101.0;
  CHECK_THROWS_WITH_AS(expm(big), doctest::Contains("divergence"), std::runtime_error);
}

TEST_CASE("expm(A) expm(-A) is the identity") {
  Rng rng(103);
  for (int trial = 0; trial < 6; ++trial) {
    Matrix a = random_matrix(5, 5, rng, 0.4);  // ||A||_1 <= 5 comfortably
    Matrix prod = matmul(expm(a).value, expm(scale(a, -1.0)).value);
    CHECK(max_abs_diff(prod, Matrix::identity(5)) <= 1e-9);
  }
}

TEST_CASE("expm(A+B) = expm(A) expm(B) for commuting pairs") {
  Rng rng(104);
  for (int trial = 0; trial < 6; ++trial) {
    // both diagonal in a shared random eigenbasis
    const std::size_t n = 4;
    Matrix p = random_matrix(n, n, rng);
    for (std::size_t i = 0; i < n; ++i) p(i, i) += 3.0;
    Matrix d1(n, n), d2(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      d1(i, i) = rng.normal() * 0.5;
      d2(i, i) = rng.normal() * 0.5;
    }
    const Matrix pinv = solve_lu(p, Matrix::identity(n));
    const Matrix a = matmul(p, matmul(d1, pinv));
    const Matrix b = matmul(p, matmul(d2, pinv));
    const Matrix lhs = expm(add(a, b)).value;
    const Matrix rhs = matmul(expm(a).value, expm(b).value);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("expm is bit-deterministic") {
  Rng rng(105);
  Matrix a = random_matrix(7, 7, rng, 0.8);
  CHECK(expm(a).value == expm(a).value);
}

TEST_CASE("frechet derivative at zero is the identity map") {
  Rng rng(106);
  Matrix e = random_matrix(4, 4, rng);
  CHECK(max_abs_diff(expm_frechet(Matrix(4, 4), e), e) <= 1e-13);
}

TEST_CASE("frechet derivative of a diagonal matrix") {
  Matrix a(2, 2), e(2, 2);
  a(0, 0) = 0.4;
  a(1, 1) = -0.9;
  e(0, 0) = 2.0;
  e(1, 1) = -3.0;
  Matrix l = expm_frechet(a, e);
  CHECK(l(0, 0) == doctest::Approx(2.0 * std::exp(0.4)).epsilon(1e-13));
  CHECK(l(1, 1) == doctest::Approx(-3.0 * std::exp(-0.9)).epsilon(1e-13));
}

TEST_CASE("frechet derivative matches block oracle and finite differences") {
  Rng rng(107);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix a = random_matrix(5, 5, rng, 0.4);
    Matrix e = random_matrix(5, 5, rng, 0.7);
    Matrix l = expm_frechet(a, e);
    CHECK(rel_frob_err(l, taylor_frechet(a, e)) <= 1e-10);

    const double h = 1e-6;
    Matrix ap = a, am = a;
    axpy(ap, h, e);
    axpy(am, -h, e);
    Matrix fd = sub(expm(ap).value, expm(am).value);
    for (double& v : fd.vec()) v /= 2.0 * h;
    CHECK(rel_frob_err(l, fd) <= 1e-5);
  }
}

TEST_CASE("frechet derivative is linear in the direction") {
  Rng rng(108);
  Matrix a = random_matrix(4, 4, rng, 0.5);
  Matrix e1 = random_matrix(4, 4, rng);
  Matrix e2 = random_matrix(4, 4, rng);
  const double alpha = 1.7, beta = -0.3;
  Matrix mix = add(scale(e1, alpha), scale(e2, beta));
  Matrix lhs = expm_frechet(a, mix);
  Matrix rhs = add(scale(expm_frechet(a, e1), alpha), scale(expm_frechet(a, e2), beta));
  CHECK(max_abs_diff(lhs, rhs) <= 1e-10);
}

TEST_CASE("expm_vjp at zero is the identity map") {
  Rng rng(109);
  Matrix g = random_matrix(3, 3, rng);
  CHECK(max_abs_diff(expm_vjp(Matrix(3, 3), g), g) <= 1e-13);
}

TEST_CASE("expm_vjp satisfies the adjoint identity") {
  Rng rng(110);
  for (int trial = 0; trial < 6; ++trial) {
    Matrix a = random_matrix(4, 4, rng, 0.5);
    Matrix e = random_matrix(4, 4, rng);
    Matrix g = random_matrix(4, 4, rng);
    const double lhs = frobenius(expm_frechet(a, e), g);
    const double rhs = frobenius(e, expm_vjp(a, g));
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("expm_vjp matches finite differences of sum of exp entries") {
  Rng rng(111);
  Matrix a = random_matrix(4, 4, rng, 0.5);
  Matrix ones(4, 4);
  for (double& v : ones.vec()) v = 1.0;
  Matrix grad = expm_vjp(a, ones);

  const double h = 1e-6;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Matrix ap = a, am = a;
      ap(i, j) += h;
      am(i, j) -= h;
      const Matrix ep = expm(ap).value, em = expm(am).value;
      double fp = 0.0, fm = 0.0;
      for (double v : ep.vec()) fp += v;
      for (double v : em.vec()) fm += v;
      const double fd = (fp - fm) / (2.0 * h);
      CHECK(std::fabs(grad(i, j) - fd) <= 1e-5 * std::max(1.0, std::fabs(fd)));
    }
}
