#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mkp/integralrep.hpp"

using namespace mkp;
constexpr double kPi = std::numbers::pi;

TEST_CASE("Pochhammer symbol") {
  CHECK(pochhammer(3.0, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
  CHECK(pochhammer(-2.0, 3) == 0.0);
}

TEST_CASE("Bessel series against the standard library") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(1.5, 0.0) == 0.0);
  CHECK(bessel_j(0.5, kPi / 2.0) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(std::abs(bessel_j(0.0, 2.404826)) < 1e-6);
  for (double nu : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    for (double z : {0.01, 0.7, 3.0, 11.0, 25.0, 38.0}) {
      const double want = std::cyl_bessel_j(nu, z);
      CHECK(std::abs(bessel_j(nu, z) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
  for (double z : {0.3, 5.0, 17.0, 38.0, 55.0}) CHECK(bessel_j(0.5, z) == doctest::Approx(std::sqrt(2.0 / (kPi * z)) * std::sin(z)));
  CHECK_THROWS_AS(bessel_j(0.0, 61.0), ConvergenceError);
  SpecialFnConfig tight;
  tight.bessel_max_z = 20.0;
  CHECK_THROWS_AS(bessel_j(0.0, 25.0, tight), ConvergenceError);
  CHECK_THROWS_AS(bessel_j(0.0, -1.0), std::domain_error);
}

TEST_CASE("terminating 2F0") {
  CHECK(hyp2f0_terminating(0, 0.7) == 1.0);
  CHECK(hyp2f0_terminating(1, 1.0) == doctest::Approx(2.0));
  CHECK(std::pow(2.0, 4) / 24.0 * hyp2f0_terminating(4, 2.0) == doctest::Approx(7.0));
  for (std::size_t n : {2u, 5u, 9u}) {
    for (double theta : {0.3, 1.0, 4.0}) {
      double want = 0.0, term = 1.0;
      for (std::size_t j = 0; j <= n; ++j) {
        want += term;
        term *= theta / (j + 1.0);
      }
      CHECK(std::pow(theta, n) / std::tgamma(n + 1.0) * hyp2f0_terminating(n, theta) ==
            doctest::Approx(want).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(hyp2f0_terminating(3, 0.0), std::domain_error);
}

TEST_CASE("Laguerre polynomials") {
  CHECK(laguerre_l(0, 0.5, 3.0) == 1.0);
  CHECK(laguerre_l(1, 0.0, 1.0) == doctest::Approx(0.0));
  CHECK(laguerre_l(2, 1.0, 2.0) == doctest::Approx(0.5 * (4.0 - 12.0 + 6.0)));
  CHECK(laguerre_l(5, 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(laguerre_l(4, 2.5, 0.0) == doctest::Approx(pochhammer(3.5, 4) / 24.0));
}

TEST_CASE("outer cutoff covers the tail") {
  SpecialFnConfig cfg;
  for (double p : {0.0, 1.5, 8.0}) {
    const double t = outer_cutoff(p, cfg);
    const double peak = p > 0.0 ? p * std::log(p) - p : 0.0;
    CHECK(-t + p * std::log(t) <= std::log(cfg.tail_tol) + peak + 1e-9);
    CHECK(t > p);
  }
}

TEST_CASE("Laguerre polynomials through the Bessel integral") {
  CHECK(laguerre_via_bessel(0.0, 0, -1.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(laguerre_via_bessel(0.0, 1, -1.0)) < 1e-6);
  CHECK(laguerre_via_bessel(0.5, 3, -2.0) == doctest::Approx(laguerre_l(3, 0.5, 2.0)).epsilon(1e-6));
  for (double alpha : {0.0, 0.5, 2.0})
    for (std::size_t n : {0u, 4u, 8u})
      for (double x : {-0.1, -2.5, -10.0}) {
        const double want = laguerre_l(n, alpha, -x);
        CHECK(std::abs(laguerre_via_bessel(alpha, n, x) - want) <= 1e-6 * std::max(1.0, std::abs(want)));
      }
  CHECK_THROWS_AS(laguerre_via_bessel(0.0, 1, 0.0), std::domain_error);
}

TEST_CASE("partial sums of the exponential series") {
  const auto f = f_n_partial_sum(1, 2, 1.0);
  CHECK(f.direct == doctest::Approx(5.0 / 3.0));
  CHECK(f.integral == doctest::Approx(5.0 / 3.0).epsilon(1e-10));
  for (int c : {1, 2, 3})
    for (std::size_t n : {0u, 3u, 10u})
      for (double t : {0.05, 1.0, 7.5, 20.0}) {
        const auto r = f_n_partial_sum(c, n, t);
        CHECK(r.integral == doctest::Approx(r.direct).epsilon(1e-10));
      }
  CHECK_THROWS_AS(f_n_partial_sum(0, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(f_n_partial_sum(1, 2, 0.0), std::domain_error);
}

TEST_CASE("double-integral representation") {
  CHECK(sobolev_laguerre_closed_form(0.0, 1.0, 1, -1.0) == doctest::Approx(1.0));
  for (double alpha : {0.0, 1.0})
    for (int c : {1, 2})
      for (std::size_t n : {0u, 3u})
        for (double x : {-0.5, -5.0}) {
          const auto r = compare_integral_rep(alpha, c, n, x);
          CHECK(r.relative_error <= 1e-10);
        }
  // The closed form vanishes here, so the comparison falls back to the term scale.
  const auto zero = compare_integral_rep(2.0, 1, 1, -5.0);
  CHECK(std::abs(zero.closed_form) < 1e-12);
  CHECK(zero.scale > 0.1);
  CHECK(zero.relative_error <= 1e-10);
  CHECK_THROWS_AS(sobolev_laguerre_integral_rep(0.0, 0, 1, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(sobolev_laguerre_integral_rep(0.0, 1, 1, 0.5), std::domain_error);
}
