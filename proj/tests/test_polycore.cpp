#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "mkp/families.hpp"
#include "mkp/polynomial.hpp"
#include "oracles.hpp"

using namespace mkp;
constexpr double kPi = std::numbers::pi;

TEST_CASE("polynomial evaluation") {
  CHECK(poly_eval(Polynomial{1.0}, 5.0) == 1.0);
  CHECK(poly_eval(Polynomial{-1.0, 0.0, 2.0}, 1.0) == 1.0);
  CHECK(poly_eval(Polynomial{0.0}, 3.0) == 0.0);
  CHECK(Polynomial{0.0}.is_zero());
  CHECK(Polynomial{1.0, 2.0, 0.0, 0.0}.degree() == 1);
}

TEST_CASE("polynomial derivative") {
  CHECK(poly_derivative(Polynomial{4.0}).is_zero());
  CHECK(poly_derivative(Polynomial{0.0, 0.0, 1.0}) == Polynomial{0.0, 2.0});

  const Polynomial t2{-1.0, 0.0, 2.0};
  const double fd = oracle::central_difference([&](double x) { return t2(x); }, 1.0);
  CHECK(poly_derivative(t2)(1.0) == doctest::Approx(4.0));
  CHECK(fd == doctest::Approx(4.0).epsilon(1e-8));

  const Jet j = t2.jet(0.7);
  CHECK(j.value == doctest::Approx(t2(0.7)));
  CHECK(j.d1 == doctest::Approx(2.8));
  CHECK(j.d2 == doctest::Approx(4.0));
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{1.0, 1.0};
  const Polynomial q{-1.0, 1.0};
  CHECK(p * q == Polynomial{-1.0, 0.0, 1.0});
  CHECK((p - p).is_zero());
  CHECK(p.shifted(2.0) == Polynomial{3.0, 1.0});
  CHECK(q.reflected() == Polynomial{-1.0, -1.0});
  CHECK(max_abs_coefficient(Polynomial{0.5, -3.0}) == 3.0);
}

TEST_CASE("Chebyshev recurrence coefficients") {
  const auto rc = recurrence_coefficients(Family::chebyshev1(), 10);
  CHECK(rc.mu0 == doctest::Approx(kPi));
  CHECK(rc.a_hat[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  for (std::size_t n = 1; n <= 10; ++n) CHECK(rc.a_hat[n] == doctest::Approx(0.5));
  for (double b : rc.b_hat) CHECK(b == 0.0);
}

TEST_CASE("recurrence coefficients match moment orthonormalization") {
  const std::size_t n = 6;
  SUBCASE("Chebyshev") {
    const auto want = oracle::gram_schmidt_recurrence(oracle::chebyshev_moments(2 * n + 2), n);
    const auto rc = recurrence_coefficients(Family::chebyshev1(), n);
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(rc.a_hat[k] == doctest::Approx(want.a[k]).epsilon(1e-14));
      CHECK(std::abs(rc.b_hat[k] - want.b[k]) < 1e-14);
    }
  }
  SUBCASE("reflected Laguerre") {
    for (double alpha : {0.0, 0.5, 3.0}) {
      const auto want = oracle::gram_schmidt_recurrence(oracle::laguerre_neg_moments(alpha, 2 * n + 2), n);
      const auto rc = recurrence_coefficients(Family::laguerre_neg(alpha), n);
      CHECK(rc.mu0 == doctest::Approx(std::tgamma(alpha + 1.0)));
      for (std::size_t k = 0; k <= n; ++k) {
        CHECK(rc.a_hat[k] == doctest::Approx(std::sqrt((k + 1.0) * (k + alpha + 1.0))));
        CHECK(rc.b_hat[k] == doctest::Approx(-(2.0 * k + alpha + 1.0)));
        CHECK(rc.a_hat[k] == doctest::Approx(want.a[k]).epsilon(1e-14));
        CHECK(rc.b_hat[k] == doctest::Approx(want.b[k]).epsilon(1e-14));
      }
    }
  }
  SUBCASE("Jacobi") {
    for (auto [a, b] : {std::pair{0.5, -0.3}, std::pair{0.0, 0.0}, std::pair{1.7, -0.5}, std::pair{-0.5, 1.7}}) {
      const auto want = oracle::gram_schmidt_recurrence(oracle::jacobi_moments(a, b, 2 * n + 2), n);
      const auto rc = recurrence_coefficients(Family::jacobi(a, b), n);
      CHECK(rc.b_hat[0] == doctest::Approx((b - a) / (a + b + 2.0)));
      for (std::size_t k = 0; k <= n; ++k) {
        CHECK(rc.a_hat[k] == doctest::Approx(want.a[k]).epsilon(1e-14));
        CHECK(std::abs(rc.b_hat[k] - want.b[k]) < 1e-14);
      }
    }
  }
}

TEST_CASE("Jacobi(-1/2, -1/2) reproduces the Chebyshev family") {
  const auto j = recurrence_coefficients(Family::jacobi(-0.5, -0.5), 12);
  const auto c = recurrence_coefficients(Family::chebyshev1(), 12);
  CHECK(j.mu0 == doctest::Approx(c.mu0));
  for (std::size_t k = 0; k <= 12; ++k) {
    CHECK(j.a_hat[k] == doctest::Approx(c.a_hat[k]).epsilon(1e-14));
    CHECK(std::abs(j.b_hat[k]) < 1e-15);
  }
}

TEST_CASE("orthonormal values and derivatives") {
  const auto cheb = recurrence_coefficients(Family::chebyshev1(), 20);
  const Jet g0 = orthonormal_eval2(cheb, 0, 0.3);
  CHECK(g0.value == doctest::Approx(1.0 / std::sqrt(kPi)));
  CHECK(g0.d1 == 0.0);
  CHECK(g0.d2 == 0.0);
  CHECK(orthonormal_eval2(cheb, 3, 1.0).value == doctest::Approx(std::sqrt(2.0 / kPi)));
  for (std::size_t n = 1; n <= 20; ++n) {
    const double x = 0.37;
    CHECK(orthonormal_eval2(cheb, n, x).value == doctest::Approx(std::sqrt(2.0 / kPi) * std::cos(n * std::acos(x))));
  }

  for (const Family& f : {Family::chebyshev1(), Family::jacobi(0.5, -0.3), Family::laguerre_neg(0.5)}) {
    const auto rc = recurrence_coefficients(f, 8);
    const double x = f.is_jacobi_type() ? 0.3 : -0.3;
    const auto value = [&](double y) { return orthonormal_eval2(rc, 5, y).value; };
    const auto deriv = [&](double y) { return orthonormal_eval2(rc, 5, y).d1; };
    const Jet j = orthonormal_eval2(rc, 5, x);
    CHECK(std::abs(j.d1 - oracle::central_difference(value, x)) < 1e-6 * std::max(1.0, std::abs(j.d1)));
    CHECK(std::abs(j.d2 - oracle::central_difference(deriv, x)) < 1e-6 * std::max(1.0, std::abs(j.d2)));
  }
}

TEST_CASE("monomial coefficients") {
  const auto cheb = recurrence_coefficients(Family::chebyshev1(), 4);
  const double s = std::sqrt(2.0 / kPi);
  const Polynomial g1 = orthonormal_coeffs(cheb, 1);
  CHECK(g1.coefficient(0) == doctest::Approx(0.0));
  CHECK(g1.coefficient(1) == doctest::Approx(s));
  const Polynomial g2 = orthonormal_coeffs(cheb, 2);
  CHECK(g2.coefficient(0) == doctest::Approx(-s));
  CHECK(g2.coefficient(1) == doctest::Approx(0.0));
  CHECK(g2.coefficient(2) == doctest::Approx(2.0 * s));

  for (double alpha : {0.0, 2.5}) {
    const auto lag = recurrence_coefficients(Family::laguerre_neg(alpha), 2);
    const Polynomial l0 = orthonormal_coeffs(lag, 0);
    CHECK(l0.degree() == 0);
    CHECK(l0.coefficient(0) == doctest::Approx(1.0 / std::sqrt(std::tgamma(alpha + 1.0))));
  }

  CHECK_THROWS_AS(orthonormal_coeffs(recurrence_coefficients(Family::chebyshev1(), 50), 45), std::out_of_range);
}

TEST_CASE("recurrence invariants hold for every family") {
  for (const Family& f : {Family::chebyshev1(), Family::jacobi(1.7, -0.5), Family::laguerre_neg(3.0)}) {
    const auto rc = recurrence_coefficients(f, 20);
    const auto basis = orthonormal_basis(rc, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      CHECK(rc.a_hat[n] > 0.0);
      CHECK(basis[n].degree() == static_cast<int>(n));
      CHECK(basis[n].leading() > 0.0);
    }
    // x g_n = a_{n-1} g_{n-1} + b_n g_n + a_n g_{n+1} at sample points.
    for (double x : {-0.9, -0.2, 0.4, 0.95}) {
      const double y = f.is_jacobi_type() ? x : 8.0 * (x - 1.0);
      const auto g = orthonormal_values<double>(rc, 20, y);
      for (std::size_t n = 0; n < 20; ++n) {
        const double prev = n > 0 ? rc.a_hat[n - 1] * g[n - 1] : 0.0;
        const double rhs = prev + rc.b_hat[n] * g[n] + rc.a_hat[n] * g[n + 1];
        const double scale = std::abs(prev) + std::abs(rc.b_hat[n] * g[n]) + std::abs(rc.a_hat[n] * g[n + 1]);
        CHECK(std::abs(y * g[n] - rhs) <= 1e-13 * std::max(scale, 1.0));
      }
    }
  }
}

TEST_CASE("coefficient and recurrence evaluation agree") {
  const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 16);
  const auto basis = orthonormal_basis(rc, 16);
  for (double x : {-1.0, -0.5, 0.1, 0.8, 1.0}) {
    const auto g = orthonormal_values<double>(rc, 16, x);
    for (std::size_t n = 0; n <= 16; ++n) CHECK(std::abs(basis[n](x) - g[n]) < 1e-9 * std::max(1.0, std::abs(g[n])));
  }
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(Family::jacobi(-1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Family::jacobi(0.0, -1.5), std::invalid_argument);
  CHECK_THROWS_AS(Family::laguerre_neg(-1.0), std::invalid_argument);
  CHECK(Family::laguerre_neg(0.0).support_edge() == 0.0);
  CHECK(Family::jacobi(0.0, 0.0).support_edge() == 1.0);
  CHECK_THROWS_AS(orthonormal_eval2(recurrence_coefficients(Family::chebyshev1(), 3), 5, 0.0), std::out_of_range);
}
