#include <cmath>

#include "doctest.h"
#include "mkp/diffop.hpp"
#include "mkp/families.hpp"
#include "mkp/kernels.hpp"

using namespace mkp;

TEST_CASE("operator coefficients") {
  const auto j = DifferentialOperator::jacobi(0.5, -0.3, 2.0);
  CHECK(j.p2 == Polynomial{-1.0, 0.0, 1.0});
  CHECK(j.p1.coefficient(1) == doctest::Approx(2.2));
  CHECK(j.p1.coefficient(0) == doctest::Approx(0.8));
  CHECK(j.p0 == Polynomial{2.0});
  const auto l = DifferentialOperator::laguerre(1.5, 0.5);
  CHECK(l.p2 == Polynomial{0.0, 1.0});
  CHECK(l.p1 == Polynomial{2.5, 1.0});
  CHECK(l.p0 == Polynomial{0.5});
}

TEST_CASE("constants are scaled by c and degree is preserved") {
  for (const Family& f : {Family::jacobi(1.7, -0.5), Family::laguerre_neg(0.5), Family::chebyshev1()}) {
    const auto op = DifferentialOperator::for_family(f, 3.0);
    CHECK(op.apply(Polynomial{2.0}) == Polynomial{6.0});
    const Polynomial p{0.1, -0.4, 0.0, 2.0, 1.0};
    CHECK(op.apply(p).degree() == p.degree());
    // Jet and coefficient application agree.
    const double x = -0.35;
    CHECK(op.apply(p.jet(x), x) == doctest::Approx(op.apply(p)(x)));
  }
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue_jacobi(0, 0.5, -0.3, 2.0) == 2.0);
  CHECK(eigenvalue_jacobi(2, -0.5, -0.5, 0.7) == doctest::Approx(4.7));
  CHECK(eigenvalue_jacobi(3, -3.0, 0.5, 0.0) == doctest::Approx(4.5));
  CHECK(eigenvalue_laguerre(0, 1.3) == 1.3);
  CHECK(eigenvalue_laguerre(4, 1.0) == 5.0);
  CHECK(family_eigenvalue(Family::laguerre_neg(2.0), 3, 1.0) == 4.0);
  CHECK(family_eigenvalue(Family::chebyshev1(), 2, 1.0) == doctest::Approx(5.0));
}

TEST_CASE("orthonormal members are eigenfunctions") {
  for (const Family& f : {Family::jacobi(0.5, -0.3), Family::jacobi(-0.5, 1.7), Family::chebyshev1(),
                          Family::laguerre_neg(0.0), Family::laguerre_neg(3.0)}) {
    CHECK(verify_eigen_relation(f, 0.1, 15) <= 1e-11);
    CHECK(verify_eigen_relation(f, 10.0, 15) <= 1e-11);
  }
  const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 6);
  const auto op = DifferentialOperator::jacobi(0.5, -0.3, 1.0);
  const auto g6 = orthonormal_coeffs(rc, 6);
  const auto image = op.apply(g6);
  const double l = eigenvalue_jacobi(6, 0.5, -0.3, 1.0);
  for (std::size_t k = 0; k <= 6; ++k)
    CHECK(std::abs(image.coefficient(k) - l * g6.coefficient(k)) <= 1e-10 * l * max_abs_coefficient(g6));
}

TEST_CASE("kernel images") {
  const auto p0 = jacobi_sobolev_poly(0.5, -0.3, 2.0, 1.5, 0);
  const auto rc = recurrence_coefficients(Family::jacobi(0.5, -0.3), 1);
  CHECK(DifferentialOperator::jacobi(0.5, -0.3, 2.0).apply(p0)(0.2) ==
        doctest::Approx(kernel_poly(rc, 1.5, 0, 0.2)));
  CHECK(verify_kernel_image(Family::jacobi(0.5, -0.3), 2.0, 1.5, 12) <= 1e-10);
  CHECK(verify_kernel_image(Family::laguerre_neg(1.0), 0.5, 0.0, 12) <= 1e-10);
  CHECK(verify_kernel_image(Family::chebyshev1(), 1.0, 1.0, 12) <= 1e-10);
}

TEST_CASE("composed fourth-order equations at the edge") {
  const auto cheb = verify_composed_equation(Family::chebyshev1(), 1.0, 10);
  CHECK(cheb.shifted <= 1e-9);
  CHECK(cheb.shifted_adopted());
  const auto lag = verify_composed_equation(Family::laguerre_neg(0.0), 2.0, 10);
  CHECK(lag.adopted() <= 1e-9);
  CHECK(verify_composed_equation(Family::jacobi(1.7, -0.5), 0.1, 10).shifted <= 1e-9);
  // n = 0 alone: both sides vanish.
  CHECK(verify_composed_equation(Family::jacobi(0.5, -0.3), 2.0, 0).shifted == 0.0);
}

TEST_CASE("default sample points lie on the support") {
  for (const Family& f : {Family::jacobi(0.0, 0.0), Family::laguerre_neg(0.0)}) {
    const auto xs = default_sample_points(f, 21);
    CHECK(xs.size() == 21);
    for (double x : xs) {
      CHECK(x >= f.support_lower());
      CHECK(x <= f.support_upper());
    }
  }
}
