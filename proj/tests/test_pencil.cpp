#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "mkp/families.hpp"
#include "mkp/kernels.hpp"
#include "mkp/pencil.hpp"
#include "mkp/weight_source.hpp"

using namespace mkp;

namespace {

WeightSequence ones(std::size_t n) { return WeightSequence(std::vector<double>(n, 1.0)); }

std::vector<double> grid(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1.0);
  return out;
}

}  // namespace

TEST_CASE("unit weights give the second-difference bands") {
  const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 12);
  const auto p = build_pencil_formulas(rc, ones(14), 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(p.a[n] == doctest::Approx(1.0));
    CHECK(p.b[n] == doctest::Approx(-2.0));
    CHECK(p.gamma_band[n] == doctest::Approx(rc.a_hat[n + 1]));
  }
}

TEST_CASE("Chebyshev start values") {
  const auto rc = recurrence_coefficients(Family::chebyshev1(), 6);
  const auto p = build_pencil_formulas(rc, ones(7), 4);
  CHECK(p.alpha_tilde == doctest::Approx(std::sqrt(2.0)));
  CHECK(p.beta_tilde == doctest::Approx(1.0));
}

TEST_CASE("band entries against the explicit expressions") {
  const auto rc = recurrence_coefficients(Family::laguerre_neg(0.5), 10);
  const WeightSequence w(random_weights(3, 11));
  const auto p = build_pencil_formulas(rc, w, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    const double cn = w[n], c1 = w[n + 1], c2 = w[n + 2];
    CHECK(p.a[n] == doctest::Approx(1.0 / (c1 * c1)));
    CHECK(p.b[n] == doctest::Approx(-1.0 / (cn * cn) - 1.0 / (c1 * c1)));
    CHECK(p.b[n] < 0.0);
    CHECK(p.alpha_band[n] ==
          doctest::Approx(2.0 * rc.a_hat[n] / (cn * c1) - rc.b_hat[n] / (cn * cn) - rc.b_hat[n + 1] / (c1 * c1)));
    CHECK(p.beta_band[n] ==
          doctest::Approx(rc.b_hat[n + 1] / (c1 * c1) - rc.a_hat[n + 1] / (c1 * c2) - rc.a_hat[n] / (cn * c1)));
    CHECK(p.gamma_band[n] == doctest::Approx(rc.a_hat[n + 1] / (c1 * c2)));
    CHECK(p.gamma_band[n] > 0.0);
  }
}

TEST_CASE("matrix path with unit weights") {
  const auto rc = recurrence_coefficients(Family::chebyshev1(), 6);
  const auto m = build_pencil_matrices(rc, ones(6), 5);
  for (std::size_t i = 0; i + 2 < 5; ++i) {
    CHECK(m.j3(i, i) == doctest::Approx(-2.0));
    if (i + 3 < 5) CHECK(m.j3(i, i + 1) == doctest::Approx(1.0));
  }
  CHECK(m.j3.is_symmetric(1e-15));
  CHECK(m.j5.is_symmetric(1e-15));
  CHECK(m.j5.lower() == 2);
}

TEST_CASE("formula and matrix paths agree on the interior block") {
  const auto rc = recurrence_coefficients(Family::chebyshev1(), 14);
  const WeightSequence w(random_weights(kDefaultSeed, 15));
  const auto f = build_pencil_formulas(rc, w, 12);
  const auto m = build_pencil_matrices(rc, w, 12);
  CHECK(pencil_path_difference(f, m) <= 1e-13);
  // J5 second subdiagonal is gamma.
  for (std::size_t i = 0; i + 4 < 12; ++i) CHECK(m.j5(i + 2, i) == doctest::Approx(f.gamma_band[i]).epsilon(1e-13));
}

TEST_CASE("associated polynomials") {
  const auto rc = recurrence_coefficients(Family::chebyshev1(), 12);
  const auto w = ones(13);
  const auto p = build_pencil_formulas(rc, w, 10);
  const auto polys = associated_polynomials(p, 10);
  CHECK(polys[0] == Polynomial{1.0});
  CHECK(polys[1] == Polynomial{p.beta_tilde, p.alpha_tilde});
  for (std::size_t n = 0; n <= 10; ++n) CHECK(polys[n].degree() == static_cast<int>(n));

  const auto lambdas = grid(-1.0, 1.0, 20);
  for (double x : lambdas) {
    const auto vals = associated_values(p, 10, x);
    const auto kern = normalized_kernel_values(rc, w, 10, x);
    double scale = 0.0;
    for (std::size_t n = 0; n <= 10; ++n) {
      scale = std::max(scale, std::abs(kern[n]));
      CHECK(std::abs(polys[n](x) - vals[n]) <= 1e-11 * std::max(1.0, std::abs(vals[n])));
      // Direct oracle: sum_k c_k g_k(x) / (c_0 g_0) with unit c.
      double direct = 0.0;
      for (std::size_t k = 0; k <= n; ++k) direct += orthonormal_eval2(rc, k, x).value;
      direct /= rc.g0;
      CHECK(std::abs(vals[n] - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
  CHECK(pencil_kernel_equivalence(rc, w, 10, lambdas).max_relative <= 1e-9);
}

TEST_CASE("five-term residual") {
  const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 12);
  const auto w = generate_weights(rc, PlainKernel{1.0}, 13);
  const auto p = build_pencil_formulas(rc, w, 10);
  auto polys = associated_polynomials(p, 10);
  const auto lambdas = grid(-1.0, 1.0, 11);
  CHECK(five_term_residual(p, polys, lambdas).max_relative <= 1e-10);

  std::vector<Polynomial> kernels;
  for (std::size_t n = 0; n <= 10; ++n) {
    std::vector<double> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = w[k] / (w[0] * rc.g0);
    kernels.push_back(OrthoSeries(rc, c).to_polynomial());
  }
  CHECK(five_term_residual(p, kernels, lambdas).max_relative <= 1e-9);

  std::vector<double> c3(polys[3].coefficients().begin(), polys[3].coefficients().end());
  c3[1] += 1e-3;
  polys[3] = Polynomial(c3);
  CHECK(five_term_residual(p, polys, lambdas).max_abs > 1e-4);
}

TEST_CASE("associated polynomials equal normalised kernels for every weight kind") {
  for (const Family& f : {Family::chebyshev1(), Family::jacobi(0.5, -0.3), Family::laguerre_neg(0.5)}) {
    const auto rc = recurrence_coefficients(f, 16);
    const auto lambdas = f.is_jacobi_type() ? grid(-1.0, 1.0, 20) : grid(-10.0, 0.0, 20);
    const std::vector<WeightRule> rules{PlainKernel{f.support_edge()}, EigScaledKernel{1.0, f.support_edge()},
                                        ExplicitWeights{WeightSequence(random_weights(5, 17))}};
    for (const auto& rule : rules) {
      const auto w = generate_weights(rc, rule, 17);
      CHECK(pencil_kernel_equivalence(rc, w, 12, lambdas).max_relative <= 1e-9);
    }
  }
}

TEST_CASE("weight sequences must be positive") {
  CHECK_THROWS_AS(WeightSequence(std::vector<double>{1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSequence(std::vector<double>{1.0, -2.0}), std::invalid_argument);
  const auto rc = recurrence_coefficients(Family::chebyshev1(), 4);
  CHECK_THROWS(build_pencil_formulas(rc, ones(3), 4));
}
