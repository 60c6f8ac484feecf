#include "mkp/diffop.hpp"

#include <algorithm>
#include <cmath>

#include "mkp/kernels.hpp"

namespace mkp {

DifferentialOperator DifferentialOperator::jacobi(double alpha, double beta, double c) {
  return {Polynomial{-1.0, 0.0, 1.0}, Polynomial::linear(alpha + beta + 2.0, alpha - beta), Polynomial::constant(c)};
}

DifferentialOperator DifferentialOperator::laguerre(double alpha, double c) {
  return {Polynomial::monomial(1.0, 1), Polynomial::linear(1.0, alpha + 1.0), Polynomial::constant(c)};
}

DifferentialOperator DifferentialOperator::for_family(const Family& family, double c) {
  if (family.is_jacobi_type()) return jacobi(family.alpha(), family.beta(), c);
  return laguerre(family.alpha(), c);
}

Polynomial DifferentialOperator::apply(const Polynomial& f) const {
  const Polynomial d1 = f.derivative();
  const Polynomial d2 = d1.derivative();
  return p2 * d2 + p1 * d1 + p0 * f;
}

double eigenvalue_jacobi(std::size_t n, double alpha, double beta, double c) {
  const double nn = static_cast<double>(n);
  return c + nn * (nn + alpha + beta + 1.0);
}

double eigenvalue_laguerre(std::size_t n, double c) { return c + static_cast<double>(n); }

double family_eigenvalue(const Family& family, std::size_t n, double c) {
  if (family.is_jacobi_type()) return eigenvalue_jacobi(n, family.alpha(), family.beta(), c);
  return eigenvalue_laguerre(n, c);
}

namespace {

double relative_coefficient_gap(const Polynomial& lhs, const Polynomial& rhs) {
  const double scale = std::max(max_abs_coefficient(lhs), max_abs_coefficient(rhs));
  if (scale == 0.0) return 0.0;
  return max_abs_coefficient(lhs - rhs) / scale;
}

}  // namespace

double verify_eigen_relation(const Family& family, double c, std::size_t n_max) {
  const RecurrenceCoefficients rc = recurrence_coefficients(family, n_max);
  const auto basis = orthonormal_basis(rc, n_max);
  const DifferentialOperator op = DifferentialOperator::for_family(family, c);
  double worst = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n)
    worst = std::max(worst, relative_coefficient_gap(op.apply(basis[n]), family_eigenvalue(family, n, c) * basis[n]));
  return worst;
}

std::vector<double> default_sample_points(const Family& family, std::size_t count) {
  const double lo = family.is_jacobi_type() ? -1.0 : -10.0;
  const double hi = family.is_jacobi_type() ? 1.0 : 0.0;
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i)
    xs[i] = count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return xs;
}

double verify_kernel_image(const Family& family, double c, double t0, std::size_t n_max,
                           std::span<const double> xs) {
  std::vector<double> grid;
  if (xs.empty()) {
    grid = default_sample_points(family);
    xs = grid;
  }
  const OrthoSeries scaled = sobolev_kernel_series(family, c, t0, n_max);
  const RecurrenceCoefficients& rc = scaled.recurrence();
  const auto basis = orthonormal_basis(rc, n_max);
  const DifferentialOperator op = DifferentialOperator::for_family(family, c);
  const auto g_t0 = orthonormal_values<double>(rc, n_max, t0);

  std::vector<std::vector<double>> g_x;
  g_x.reserve(xs.size());
  for (double x : xs) g_x.push_back(orthonormal_values<double>(rc, n_max, x));

  double worst = 0.0;
  Polynomial partial;
  for (std::size_t n = 0; n <= n_max; ++n) {
    partial += scaled.coefficients()[n] * basis[n];
    const Polynomial image = op.apply(partial);
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double plain = 0.0;
      for (std::size_t k = 0; k <= n; ++k) plain += g_t0[k] * g_x[i][k];
      diff = std::max(diff, std::abs(image(xs[i]) - plain));
      scale = std::max(scale, std::abs(plain));
    }
    if (scale > 0.0) worst = std::max(worst, diff / scale);
  }
  return worst;
}

ComposedResidual verify_composed_equation(const Family& family, double c, std::size_t n_max) {
  const double t0 = family.support_edge();
  const OrthoSeries scaled = sobolev_kernel_series(family, c, t0, n_max);
  const auto basis = orthonormal_basis(scaled.recurrence(), n_max);
  const DifferentialOperator inner = DifferentialOperator::for_family(family, c);
  const double a = family.alpha();
  const double b = family.beta();
  const DifferentialOperator outer = family.is_jacobi_type() ? DifferentialOperator::jacobi(a + 1.0, b, 0.0)
                                                             : DifferentialOperator::laguerre(a + 1.0, 0.0);
  ComposedResidual r;
  Polynomial partial;
  for (std::size_t n = 0; n <= n_max; ++n) {
    partial += scaled.coefficients()[n] * basis[n];
    const Polynomial image = inner.apply(partial);
    const Polynomial lhs = outer.apply(image);
    double l_shifted = 0.0;
    double l_unshifted = 0.0;
    if (family.is_jacobi_type()) {
      l_shifted = eigenvalue_jacobi(n, a + 1.0, b, 0.0);
      l_unshifted = eigenvalue_jacobi(n, a, b, 0.0);
    } else {
      l_shifted = l_unshifted = eigenvalue_laguerre(n, 0.0);
    }
    r.shifted = std::max(r.shifted, relative_coefficient_gap(lhs, l_shifted * image));
    r.unshifted = std::max(r.unshifted, relative_coefficient_gap(lhs, l_unshifted * image));
  }
  return r;
}

}  // namespace mkp
