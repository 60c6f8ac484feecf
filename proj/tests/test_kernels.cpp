#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "mkp/families.hpp"
#include "mkp/kernels.hpp"
#include "mkp/quadrature.hpp"

using namespace mkp;
constexpr double kPi = std::numbers::pi;

namespace {

// Explicit sum for the generalised Laguerre polynomial; long double keeps the
// alternating terms from swamping the result.
long double laguerre_series(std::size_t n, long double alpha, long double y) {
  long double s = 0.0L;
  for (std::size_t j = 0; j <= n; ++j)
    s += (j % 2 ? -1.0L : 1.0L) *
         std::exp(std::lgamma(n + alpha + 1.0L) - std::lgamma(n - j + 1.0L) - std::lgamma(alpha + j + 1.0L) -
                  std::lgamma(j + 1.0L)) *
         std::pow(y, static_cast<long double>(j));
  return s;
}

}  // namespace

TEST_CASE("kernel polynomial values") {
  const auto cheb = recurrence_coefficients(Family::chebyshev1(), 5);
  CHECK(kernel_poly(cheb, 0.2, 0, -0.7) == doctest::Approx(1.0 / kPi));
  CHECK(kernel_poly(cheb, 1.0, 2, 1.0) == doctest::Approx(5.0 / kPi));
  CHECK(kernel_poly(cheb, 0.3, 4, -0.6) == doctest::Approx(kernel_poly(cheb, -0.6, 4, 0.3)));
}

TEST_CASE("kernel polynomials reproduce low-degree polynomials") {
  const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 10);
  const auto rule = gauss_rule(rc, 10);
  const Polynomial p{0.3, -1.0, 0.5, 2.0};
  for (double t : {-0.8, 0.1, 0.9, 1.4}) {
    const double got = integrate(rule, [&](double x) { return kernel_poly(rc, t, 5, x) * p(x); });
    CHECK(got == doctest::Approx(p(t)).epsilon(1e-12));
  }
}

TEST_CASE("plain kernels are orthogonal against (t0 - x) dmu") {
  for (const Family& f : {Family::jacobi(0.5, -0.3), Family::laguerre_neg(1.0)}) {
    const double t0 = f.support_edge() + 0.5;
    const auto rc = recurrence_coefficients(f, 14);
    const auto rule = gauss_rule(rc, 14);
    const auto inner = [&](std::size_t n, std::size_t m) {
      return integrate(rule, [&](double x) { return kernel_poly(rc, t0, n, x) * kernel_poly(rc, t0, m, x) * (t0 - x); });
    };
    for (std::size_t n = 0; n <= 6; ++n) {
      const double diag = inner(n, n);
      CHECK(diag > 0.0);
      CHECK(diag == doctest::Approx(kernel_diagonal_closed_form(rc, t0, n)).epsilon(1e-10));
      for (std::size_t m = 0; m < n; ++m) CHECK(std::abs(inner(n, m)) <= 1e-9 * diag);
    }
  }
}

TEST_CASE("modified kernel polynomials") {
  const Family f = Family::jacobi(1.0, 0.0);
  const ModifiedKernelSpec unit{f, ExplicitWeights{WeightSequence(std::vector<double>(6, 1.0))}, 5};
  const ModifiedKernelSpec plain{f, PlainKernel{1.0}, 5};
  const auto rc = recurrence_coefficients(f, 5);
  for (double x : {-1.0, 0.0, 0.5}) {
    // Unit weights sum the orthonormal family; plain-kernel weights give K_n(1, x).
    double sum = 0.0;
    for (std::size_t k = 0; k <= 5; ++k) sum += orthonormal_eval2(rc, k, x).value;
    CHECK(modified_kernel(unit, 5)(x) == doctest::Approx(sum));
    CHECK(modified_kernel(plain, 5)(x) == doctest::Approx(kernel_poly(rc, 1.0, 5, x)));
  }
  CHECK(modified_kernel_series(unit, 0)(0.4) == doctest::Approx(rc.g0));
  CHECK_THROWS_AS(modified_kernel(unit, 6), std::out_of_range);
}

TEST_CASE("weight rules") {
  const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 10);
  CHECK_THROWS_AS(generate_weights(rc, PlainKernel{0.5}, 5), std::invalid_argument);
  CHECK_THROWS_AS(generate_weights(rc, EigScaledKernel{0.0, 1.0}, 5), std::invalid_argument);
  CHECK_THROWS_AS(generate_weights(rc, ExplicitWeights{WeightSequence(std::vector<double>{1.0})}, 3),
                  std::invalid_argument);
  const auto plain = generate_weights(rc, PlainKernel{1.0}, 8);
  const auto scaled = generate_weights(rc, EigScaledKernel{2.0, 1.0}, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(plain[k] > 0.0);
    CHECK(scaled[k] == doctest::Approx(plain[k] / (2.0 + k * (k + 1.2))));
  }
  const auto second = generate_weights(rc, SecondKind{1.5}, 8);
  CHECK(second[0] == 1.0);
  CHECK(second[1] == doctest::Approx(second_kind_eval(rc, 1, 1.5)));
}

TEST_CASE("second-kind solution") {
  for (const Family& f : {Family::chebyshev1(), Family::jacobi(0.5, -0.3), Family::laguerre_neg(0.5)}) {
    const auto rc = recurrence_coefficients(f, 12);
    for (double t : {-0.4, 1.0, 2.5}) {
      CHECK(second_kind_eval(rc, 0, t) == 0.0);
      const auto q = second_kind_values(rc, 12, t);
      const auto g = orthonormal_values<double>(rc, 12, t);
      CHECK(q[1] == doctest::Approx(1.0 / (rc.a_hat[0] * rc.g0)));
      for (std::size_t n = 0; n < 12; ++n) {
        // Outside the support both products grow and cancel, so the bound is
        // taken relative to their size.
        const double lhs = rc.a_hat[n] * g[n + 1] * q[n];
        const double rhs = rc.a_hat[n] * g[n] * q[n + 1];
        CHECK(std::abs(lhs - rhs + 1.0) <= 1e-13 * std::max({1.0, std::abs(lhs), std::abs(rhs)}));
      }
    }
  }
}

TEST_CASE("Sobolev kernel families at low degree") {
  for (double c : {0.1, 1.0, 7.0}) {
    const auto p1 = jacobi_sobolev_poly(-0.5, -0.5, c, 1.0, 1);
    CHECK(kPi * p1.coefficient(0) == doctest::Approx(1.0 / c));
    CHECK(kPi * p1.coefficient(1) == doctest::Approx(2.0 / (c + 1.0)));
    const auto p2 = jacobi_sobolev_poly(-0.5, -0.5, c, 1.0, 2);
    CHECK(kPi * p2.coefficient(2) == doctest::Approx(4.0 / (c + 4.0)));
    CHECK(kPi * p2.coefficient(1) == doctest::Approx(2.0 / (c + 1.0)));
    CHECK(kPi * p2.coefficient(0) == doctest::Approx(1.0 / c - 2.0 / (c + 4.0)));

    const auto j0 = jacobi_sobolev_poly(0.5, -0.3, c, 1.5, 0);
    const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 1);
    CHECK(j0.degree() == 0);
    CHECK(j0.coefficient(0) == doctest::Approx(rc.g0 * rc.g0 / c));

    for (double alpha : {0.0, 0.5, 3.0})
      CHECK(laguerre_sobolev_poly(alpha, c, 0.0, 0)(-2.0) == doctest::Approx(1.0 / (c * std::tgamma(alpha + 1.0))));
  }
}

TEST_CASE("half-line Sobolev polynomial at the edge is a Laguerre partial sum") {
  CHECK(laguerre_sobolev_series(0.0, 1.0, 0.0, 1)(-1.0) == doctest::Approx(1.0));
  for (double alpha : {0.0, 0.5, 2.0}) {
    for (double c : {0.5, 1.0, 3.0}) {
      const auto series = laguerre_sobolev_series(alpha, c, 0.0, 8);
      for (double x : {-0.5, -3.0, -9.0}) {
        long double want = 0.0L;
        for (std::size_t k = 0; k <= 8; ++k) want += laguerre_series(k, alpha, -x) / (k + c);
        want /= std::tgamma(alpha + 1.0L);
        CHECK(std::abs(series(x) - static_cast<double>(want)) <= 1e-13 * std::max(1.0L, std::abs(want)));
      }
    }
  }
}

TEST_CASE("Chebyshev specialisation") {
  CHECK(chebyshev_t(2.0, 0, 0.3) == doctest::Approx(1.0 / (2.0 * kPi)));
  for (double c : {0.1, 1.0, 10.0}) {
    const auto series = jacobi_sobolev_series(-0.5, -0.5, c, 1.0, 9);
    for (double x : {-1.0, -0.3, 0.55, 1.0}) {
      CHECK(chebyshev_t(c, 9, x) == doctest::Approx(series(x)).epsilon(1e-12));
      const Jet j = chebyshev_t_jet(c, 9, x);
      CHECK(j.d1 == doctest::Approx(series.jet(x).d1).epsilon(1e-11));
    }
  }
}

TEST_CASE("Chebyshev bounds") {
  const auto b0 = chebyshev_bounds_check(3.0, 0, 101);
  CHECK(b0.max_val == doctest::Approx(1.0 / (3.0 * kPi)));
  CHECK(b0.ok);
  CHECK(chebyshev_bounds_check(1.0, 10, 10001).ok);
  const auto small = chebyshev_bounds_check(0.01, 5, 2001);
  CHECK(small.ok);
  CHECK(small.max_val <= small.value_bound);
  CHECK(small.max_deriv <= small.deriv_bound);
  CHECK_THROWS_AS(chebyshev_bounds_check(1.0, 3, 0), std::invalid_argument);
}

TEST_CASE("quadratic discriminant") {
  CHECK(quadratic_discriminant(Polynomial{-1.0, 0.0, 1.0}) == doctest::Approx(4.0));
  const double c = 0.1;
  const double a = 4.0 / (c + 4.0), b = 2.0 / (c + 1.0), k = 1.0 / c - 2.0 / (c + 4.0);
  const double want = b * b - 4.0 * a * k;
  CHECK(want == doctest::Approx(-33.8).epsilon(1e-3));
  const auto t2 = jacobi_sobolev_poly(-0.5, -0.5, c, 1.0, 2) * kPi;
  CHECK(quadratic_discriminant(t2) == doctest::Approx(want).epsilon(1e-12));
  CHECK(quadratic_discriminant(laguerre_sobolev_poly(0.0, 0.1, 0.0, 2)) < 0.0);
  CHECK_THROWS_AS(quadratic_discriminant(Polynomial{1.0, 1.0}), std::invalid_argument);
}
