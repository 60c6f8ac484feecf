#include "mkp/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "mkp/linalg.hpp"

namespace mkp {

namespace {

TridiagonalEigen jacobi_matrix_eigen(const RecurrenceCoefficients& rc, std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_rule: need at least one node");
  if (rc.size() < n) throw std::out_of_range("gauss_rule: recurrence coefficients do not cover N");
  std::vector<double> diag(rc.b_hat.begin(), rc.b_hat.begin() + static_cast<long>(n));
  std::vector<double> off(rc.a_hat.begin(), rc.a_hat.begin() + static_cast<long>(n - 1));
  return tridiagonal_eigen(diag, off);
}

}  // namespace

QuadratureRule gauss_rule(const RecurrenceCoefficients& rc, std::size_t n) {
  TridiagonalEigen eig = jacobi_matrix_eigen(rc, n);
  QuadratureRule rule{std::move(eig.values), std::vector<double>(n), static_cast<int>(2 * n - 1), rc.family, {}, {}};
  rule.nodes_ext.resize(n);
  rule.weights_ext.resize(n);
  // Newton on g_N in extended precision, then Christoffel weights 1 / sum g_k^2.
  for (std::size_t i = 0; i < n; ++i) {
    long double x = rule.nodes[i];
    auto jets = orthonormal_jets<long double>(rc, n, x);
    for (int it = 0; it < 2; ++it) {
      const long double step = jets[n].value / jets[n].d1;
      if (!std::isfinite(step) || std::abs(step) > 1e-8L * (1.0L + std::abs(x))) break;
      x -= step;
      jets = orthonormal_jets<long double>(rc, n, x);
    }
    long double norm2 = 0.0L;
    for (std::size_t k = 0; k < n; ++k) norm2 += jets[k].value * jets[k].value;
    rule.nodes_ext[i] = x;
    rule.weights_ext[i] = 1.0L / norm2;
    rule.nodes[i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(rule.weights_ext[i]);
  }
  return rule;
}

QuadratureRule gauss_rule_ql_weights(const RecurrenceCoefficients& rc, std::size_t n) {
  TridiagonalEigen eig = jacobi_matrix_eigen(rc, n);
  QuadratureRule rule{std::move(eig.values), std::vector<double>(n), static_cast<int>(2 * n - 1), rc.family, {}, {}};
  for (std::size_t i = 0; i < n; ++i) rule.weights[i] = rc.mu0 * eig.first_components[i] * eig.first_components[i];
  return rule;
}

std::vector<double> family_moments(const Family& family, std::size_t k_max) {
  std::vector<double> m(k_max + 1);
  if (family.kind() == FamilyKind::laguerre_neg) {
    const double a = family.alpha();
    for (std::size_t k = 0; k <= k_max; ++k) {
      const double mag = std::exp(std::lgamma(a + static_cast<double>(k) + 1.0));
      m[k] = k % 2 == 0 ? mag : -mag;
    }
    return m;
  }
  // Integrating d/dx[x^k (1-x)^(a+1) (1+x)^(b+1)] over [-1, 1] gives
  // (k + a + b + 2) m_{k+1} = (b - a) m_k + k m_{k-1}, seeded by the Beta-function mass.
  const long double a = family.alpha();
  const long double b = family.beta();
  std::vector<long double> ml(k_max + 1);
  ml[0] = jacobi_mass(family.alpha(), family.beta());
  if (k_max >= 1) ml[1] = ml[0] * (b - a) / (a + b + 2.0L);
  for (std::size_t k = 1; k + 1 <= k_max; ++k) {
    const long double kk = static_cast<long double>(k);
    ml[k + 1] = (kk * ml[k - 1] + (b - a) * ml[k]) / (kk + a + b + 2.0L);
  }
  for (std::size_t k = 0; k <= k_max; ++k) m[k] = static_cast<double>(ml[k]);
  return m;
}

double family_moment(const Family& family, std::size_t k) { return family_moments(family, k)[k]; }

ExactnessReport check_moment_exactness(const QuadratureRule& rule) {
  ExactnessReport report;
  if (rule.exact_degree < 0) return report;
  const auto deg = static_cast<std::size_t>(rule.exact_degree);
  const std::vector<double> moments = family_moments(rule.family, deg);
  for (std::size_t k = 0; k <= deg; ++k) {
    long double q = 0.0L;
    long double q_abs = 0.0L;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const long double term = rule.weights[i] * std::pow(static_cast<long double>(rule.nodes[i]), static_cast<int>(k));
      q += term;
      q_abs += std::abs(term);
    }
    const double scale = std::max(std::abs(moments[k]), static_cast<double>(q_abs));
    const double err = std::abs(static_cast<double>(q) - moments[k]) / scale;
    if (err > report.max_relative_error) {
      report.max_relative_error = err;
      report.worst_degree = k;
    }
  }
  return report;
}

QuadratureRule gauss_legendre(std::size_t n, double lo, double hi) {
  QuadratureRule rule = gauss_rule(recurrence_coefficients(Family::jacobi(0.0, 0.0), n), n);
  const double half = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = lo + half * (rule.nodes[i] + 1.0);
    rule.weights[i] *= half;
  }
  rule.nodes_ext.clear();
  rule.weights_ext.clear();
  return rule;
}

}  // namespace mkp
