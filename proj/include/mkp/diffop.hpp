#ifndef MKP_DIFFOP_HPP_
#define MKP_DIFFOP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mkp/families.hpp"
#include "mkp/polynomial.hpp"

namespace mkp {

/// f -> p2 f'' + p1 f' + p0 f.
struct DifferentialOperator {
  Polynomial p2;
  Polynomial p1;
  Polynomial p0;

  /// (x^2 - 1) d^2 + ((a + b + 2) x + a - b) d + c.
  static DifferentialOperator jacobi(double alpha, double beta, double c);
  /// x d^2 + (a + 1 + x) d + c.
  static DifferentialOperator laguerre(double alpha, double c);
  /// Operator whose eigenfunctions are the orthonormal members of `family`.
  static DifferentialOperator for_family(const Family& family, double c);

  Polynomial apply(const Polynomial& f) const;

  template <typename T>
  T apply(const BasicJet<T>& f, T x) const {
    return eval_as(p2, x) * f.d2 + eval_as(p1, x) * f.d1 + eval_as(p0, x) * f.value;
  }

 private:
  template <typename T>
  static T eval_as(const Polynomial& p, T x) {
    T acc = T(0);
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<T>(*it);
    return acc;
  }
};

/// c + n (n + a + b + 1); defined for every real parameter.
double eigenvalue_jacobi(std::size_t n, double alpha, double beta, double c);
/// c + n.
double eigenvalue_laguerre(std::size_t n, double c);
/// Eigenvalue of DifferentialOperator::for_family(family, c) on the degree-n member.
double family_eigenvalue(const Family& family, std::size_t n, double c);

/**
 * Max over n <= n_max of the eigen-relation residual D g_n - l_n g_n in
 * monomial coefficient space, relative to the largest coefficient of l_n g_n.
 */
double verify_eigen_relation(const Family& family, double c, std::size_t n_max);

/**
 * Max over n <= n_max of |D (scaled kernel)_n - (plain kernel)_n| on the
 * sample points, relative to the largest |plain kernel_n| over the samples.
 * The operator is applied in coefficient space; the plain kernel is summed
 * from recurrence values. Empty `xs` selects a default grid on the support.
 */
double verify_kernel_image(const Family& family, double c, double t0, std::size_t n_max,
                           std::span<const double> xs = {});

struct ComposedResidual {
  /// Outer eigenvalue taken with the shifted parameters (alpha + 1, beta).
  double shifted = 0.0;
  /// Outer eigenvalue taken with the original parameters (alpha, beta).
  double unshifted = 0.0;
  double adopted() const { return shifted < unshifted ? shifted : unshifted; }
  bool shifted_adopted() const { return shifted <= unshifted; }
};

/**
 * Residual of D_{alpha+1,*,0} D_{*,c} u_n = l_{n,0} D_{*,c} u_n at the edge
 * evaluation point (t0 = 1 on [-1, 1], t0 = 0 on the half-line), for both
 * readings of the outer eigenvalue; relative in coefficient space.
 */
ComposedResidual verify_composed_equation(const Family& family, double c, std::size_t n_max);

std::vector<double> default_sample_points(const Family& family, std::size_t count = 41);

}  // namespace mkp

#endif  // MKP_DIFFOP_HPP_
