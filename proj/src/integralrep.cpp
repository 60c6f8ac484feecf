#include "mkp/integralrep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mkp/quadrature.hpp"

namespace mkp {

double pochhammer(double x, std::size_t k) {
  double p = 1.0;
  for (std::size_t i = 0; i < k; ++i) p *= x + static_cast<double>(i);
  return p;
}

double bessel_j(double nu, double z, const SpecialFnConfig& cfg) {
  if (!(nu > -1.0)) throw std::domain_error("bessel_j: order must exceed -1");
  if (!(z >= 0.0)) throw std::domain_error("bessel_j: argument must be non-negative");
  if (z > cfg.bessel_max_z)
    throw ConvergenceError("bessel_j: argument " + std::to_string(z) + " beyond the accepted range " +
                           std::to_string(cfg.bessel_max_z));
  if (z > cfg.bessel_series_max_z) return std::cyl_bessel_j(nu, z);
  if (z == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw std::domain_error("bessel_j: J_nu(0) is unbounded for negative order");
  }
  using Ext = long double;
  const Ext half = static_cast<Ext>(z) / 2.0L;
  const Ext q = half * half;
  Ext term = std::exp(static_cast<Ext>(nu) * std::log(half) - std::lgamma(static_cast<Ext>(nu) + 1.0L));
  Ext sum = term;
  for (int m = 0; m < 1000; ++m) {
    const Ext mm = static_cast<Ext>(m) + 1.0L;
    term *= -q / (mm * (mm + static_cast<Ext>(nu)));
    sum += term;
    if (mm > half && std::abs(term) <= static_cast<Ext>(cfg.series_tol) * std::abs(sum)) return static_cast<double>(sum);
  }
  throw ConvergenceError("bessel_j: series did not converge");
}

double hyp2f0_terminating(std::size_t n, double theta) {
  if (theta == 0.0)
    throw std::domain_error("hyp2f0_terminating: theta = 0 has only a limiting meaning for theta^n 2F0");
  // Term ratio (k - n)(1 + k)(-1/theta)/(k + 1) = (n - k)/theta.
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    term *= static_cast<double>(n - k) / theta;
    sum += term;
  }
  return sum;
}

double laguerre_l(std::size_t n, double alpha, double y) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - y;
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double next = ((2.0 * kk + 1.0 + alpha - y) * cur - (kk + alpha) * prev) / (kk + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double outer_cutoff(double p, const SpecialFnConfig& cfg) {
  // log of e^{-t} t^p is decreasing beyond t = max(p, 0).
  const double log_peak = p > 0.0 ? p * std::log(p) - p : 0.0;
  const double target = std::log(cfg.tail_tol) + log_peak;
  auto h = [&](double t) { return -t + p * std::log(t) - target; };
  double lo = std::max(p, 1.0);
  double hi = lo + 10.0;
  while (h(hi) > 0.0) hi *= 2.0;
  if (h(lo) <= 0.0) return lo;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

namespace {

using Ext = long double;

// Composite Gauss-Legendre over s in [0, sqrt(T)] of g(s^2) * 2s, with t = s^2.
template <typename G>
Ext integrate_sqrt_substituted(double cutoff, const SpecialFnConfig& cfg, G&& g) {
  const double s_max = std::sqrt(cutoff);
  const QuadratureRule panel = gauss_legendre(cfg.outer_rule_size, 0.0, 1.0);
  const double width = s_max / static_cast<double>(cfg.outer_panels);
  Ext total = 0.0L;
  for (std::size_t p = 0; p < cfg.outer_panels; ++p) {
    const double left = width * static_cast<double>(p);
    for (std::size_t i = 0; i < panel.size(); ++i) {
      const double s = left + width * panel.nodes[i];
      total += static_cast<Ext>(width * panel.weights[i]) * static_cast<Ext>(g(s * s)) * 2.0L * static_cast<Ext>(s);
    }
  }
  return total;
}

double checked_cutoff(double p, double x, const SpecialFnConfig& cfg) {
  const double cutoff = outer_cutoff(p, cfg);
  const double z_max = 2.0 * std::sqrt(-x * cutoff);
  if (z_max > cfg.bessel_max_z)
    throw ConvergenceError("cutoff insufficiency: T = " + std::to_string(cutoff) + " needs Bessel argument " +
                           std::to_string(z_max) + " > " + std::to_string(cfg.bessel_max_z));
  return cutoff;
}

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// int_0^t theta^{n+c-1} 2F0(-n,1;;-1/theta) dtheta, exact for the polynomial integrand.
double inner_integral(int c, std::size_t n, double t, std::size_t rule_size) {
  const std::size_t degree = n + static_cast<std::size_t>(c) - 1;
  const std::size_t nodes = std::max(rule_size, degree / 2 + 1);
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, t);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double th = rule.nodes[i];
    sum += rule.weights[i] * std::pow(th, static_cast<double>(degree)) * hyp2f0_terminating(n, th);
  }
  return sum;
}

void require_integer_c(int c) {
  if (c < 1) throw std::invalid_argument("integral representation requires a positive integer c");
}

}  // namespace

double laguerre_via_bessel(double alpha, std::size_t n, double x, const SpecialFnConfig& cfg) {
  if (!(x < 0.0)) throw std::domain_error("laguerre_via_bessel: x must be negative");
  const double p = static_cast<double>(n) + alpha / 2.0;
  const double cutoff = checked_cutoff(p, x, cfg);
  const Ext integral = integrate_sqrt_substituted(cutoff, cfg, [&](double t) {
    return std::exp(-t) * std::pow(t, p) * bessel_j(alpha, 2.0 * std::sqrt(-t * x), cfg);
  });
  const double prefactor = std::exp(-x - log_factorial(n) - 0.5 * alpha * std::log(-x));
  return static_cast<double>(integral) * prefactor;
}

PartialSumForms f_n_partial_sum(int c, std::size_t n, double t, const SpecialFnConfig& cfg) {
  require_integer_c(c);
  if (!(t > 0.0)) throw std::domain_error("f_n_partial_sum: t must be positive");
  PartialSumForms out;
  double power = 1.0;  // t^k / k!
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) power *= t / static_cast<double>(k);
    out.direct += power / (static_cast<double>(k) + c);
  }
  out.integral = inner_integral(c, n, t, cfg.inner_rule_size) * std::exp(-log_factorial(n) - c * std::log(t));
  return out;
}

double sobolev_laguerre_closed_form(double alpha, double c, std::size_t n, double x) {
  double sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) sum += laguerre_l(k, alpha, -x) / (static_cast<double>(k) + c);
  return sum / std::tgamma(alpha + 1.0);
}

double sobolev_laguerre_integral_rep(double alpha, int c, std::size_t n, double x, const SpecialFnConfig& cfg) {
  require_integer_c(c);
  if (!(alpha > -1.0)) throw std::domain_error("sobolev_laguerre_integral_rep: alpha must exceed -1");
  if (!(x < 0.0)) throw std::domain_error("sobolev_laguerre_integral_rep: x must be negative");
  const double p = static_cast<double>(n) + alpha / 2.0;
  const double cutoff = checked_cutoff(p, x, cfg);
  const Ext integral = integrate_sqrt_substituted(cutoff, cfg, [&](double t) {
    return std::exp(-t) * std::pow(t, alpha / 2.0 - c) * bessel_j(alpha, 2.0 * std::sqrt(-t * x), cfg) *
           inner_integral(c, n, t, cfg.inner_rule_size);
  });
  const double prefactor =
      std::exp(-x - std::lgamma(alpha + 1.0) - log_factorial(n) - 0.5 * alpha * std::log(-x));
  return static_cast<double>(integral) * prefactor;
}

IntegralRepComparison compare_integral_rep(double alpha, int c, std::size_t n, double x, const SpecialFnConfig& cfg) {
  IntegralRepComparison out;
  out.integral = sobolev_laguerre_integral_rep(alpha, c, n, x, cfg);
  out.closed_form = sobolev_laguerre_closed_form(alpha, c, n, x);
  double abs_sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) abs_sum += std::abs(laguerre_l(k, alpha, -x)) / (static_cast<double>(k) + c);
  abs_sum /= std::tgamma(alpha + 1.0);
  const double mag = std::abs(out.closed_form);
  out.scale = mag >= 1e-12 * abs_sum ? mag : abs_sum;
  out.relative_error = std::abs(out.integral - out.closed_form) / out.scale;
  return out;
}

}  // namespace mkp
