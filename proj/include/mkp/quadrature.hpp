#ifndef MKP_QUADRATURE_HPP_
#define MKP_QUADRATURE_HPP_

#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mkp/families.hpp"

namespace mkp {

/// Gauss rule for the weight of `family`: sum_i weights[i] f(nodes[i]) is exact
/// for polynomials f of degree <= exact_degree.
struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
  int exact_degree = -1;
  Family family;
  /// Extended-precision copies of nodes and weights (empty when not built).
  std::vector<long double> nodes_ext;
  std::vector<long double> weights_ext;

  std::size_t size() const { return nodes.size(); }
};

/**
 * N-point Gauss rule from the recurrence coefficients (Golub-Welsch): nodes
 * are the eigenvalues of the leading N x N block of the Jacobi matrix, each
 * polished by one Newton step on g_N. Weights are mu0 times the squared
 * first component of the normalised eigenvector, with the eigenvector taken
 * as (g_0(x_i), ..., g_{N-1}(x_i)); this keeps full relative accuracy for the
 * tiny weights far out on the Laguerre half-line.
 */
QuadratureRule gauss_rule(const RecurrenceCoefficients& rc, std::size_t n);

/// Same rule with weights taken from the QL-accumulated eigenvector components.
QuadratureRule gauss_rule_ql_weights(const RecurrenceCoefficients& rc, std::size_t n);

template <typename F>
  requires std::invocable<F, double>
double integrate(const QuadratureRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = static_cast<double>(f(rule.nodes[i]));
    if (!std::isfinite(v)) throw std::domain_error("integrate: integrand is not finite at a quadrature node");
    sum += rule.weights[i] * v;
  }
  return sum;
}

/// Closed-form moment int x^k w(x) dx of the family weight.
double family_moment(const Family& family, std::size_t k);

/// Moments 0..k_max of the family weight (Beta / Gamma closed forms).
std::vector<double> family_moments(const Family& family, std::size_t k_max);

struct ExactnessReport {
  double max_relative_error = 0.0;
  std::size_t worst_degree = 0;
};

/// Compares the rule's monomial moments with the closed forms up to its exact
/// degree. The error for x^k is scaled by max(|m_k|, sum_i w_i |x_i|^k), which
/// stays meaningful for odd moments of symmetric weights.
ExactnessReport check_moment_exactness(const QuadratureRule& rule);

/// Gauss-Legendre rule on [lo, hi] (unit weight).
QuadratureRule gauss_legendre(std::size_t n, double lo, double hi);

}  // namespace mkp

#endif  // MKP_QUADRATURE_HPP_
