#include "mkp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mkp/diffop.hpp"

namespace mkp {

OrthoSeries::OrthoSeries(RecurrenceCoefficients rc, std::vector<double> coeffs)
    : rc_(std::move(rc)), coeffs_(std::move(coeffs)) {
  if (!coeffs_.empty() && coeffs_.size() - 1 > rc_.max_degree())
    throw std::out_of_range("OrthoSeries: expansion longer than the recurrence coverage");
}

Polynomial OrthoSeries::to_polynomial(std::size_t cap) const {
  if (coeffs_.empty()) return {};
  const auto basis = orthonormal_basis(rc_, coeffs_.size() - 1, cap);
  Polynomial out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out += coeffs_[k] * basis[k];
  return out;
}

double kernel_poly(const RecurrenceCoefficients& rc, double t, std::size_t n, double x) {
  const auto gt = orthonormal_values<double>(rc, n, t);
  const auto gx = orthonormal_values<double>(rc, n, x);
  double sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k) sum += gt[k] * gx[k];
  return sum;
}

double kernel_diagonal_closed_form(const RecurrenceCoefficients& rc, double t0, std::size_t n) {
  const auto g = orthonormal_values<double>(rc, n + 1, t0);
  return rc.a_hat[n] * g[n] * g[n + 1];
}

namespace {

void require_edge(const Family& family, double t0) {
  if (!(t0 >= family.support_edge()))
    throw std::invalid_argument("evaluation point t0 = " + std::to_string(t0) + " lies below the support edge " +
                                std::to_string(family.support_edge()) + " of " + family.name());
}

void require_positive_c(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scaling parameter c must be positive");
}

}  // namespace

double second_kind_eval(const RecurrenceCoefficients& rc, std::size_t n, double t) {
  return second_kind_values(rc, n, t)[n];
}

std::vector<double> second_kind_values(const RecurrenceCoefficients& rc, std::size_t n, double t) {
  if (n > rc.max_degree()) throw std::out_of_range("second_kind_values: degree beyond recurrence coverage");
  std::vector<double> q(n + 1, 0.0);
  if (n == 0) return q;
  q[1] = 1.0 / (rc.a_hat[0] * rc.g0);
  for (std::size_t k = 1; k < n; ++k)
    q[k + 1] = ((t - rc.b_hat[k]) * q[k] - rc.a_hat[k - 1] * q[k - 1]) / rc.a_hat[k];
  return q;
}

WeightSequence generate_weights(const RecurrenceCoefficients& rc, const WeightRule& rule, std::size_t count) {
  if (count == 0) return WeightSequence{};
  const std::size_t n = count - 1;
  const Family& family = rc.family;
  std::vector<double> c;
  if (const auto* e = std::get_if<ExplicitWeights>(&rule)) {
    if (e->c.size() < count)
      throw std::invalid_argument("explicit weight sequence has " + std::to_string(e->c.size()) + " entries, " +
                                  std::to_string(count) + " required");
    return e->c.head(count);
  } else if (const auto* p = std::get_if<PlainKernel>(&rule)) {
    require_edge(family, p->t0);
    c = orthonormal_values<double>(rc, n, p->t0);
  } else if (const auto* s = std::get_if<EigScaledKernel>(&rule)) {
    require_positive_c(s->c);
    require_edge(family, s->t0);
    c = orthonormal_values<double>(rc, n, s->t0);
    for (std::size_t k = 0; k <= n; ++k) c[k] /= family_eigenvalue(family, k, s->c);
  } else {
    const auto& sk = std::get<SecondKind>(rule);
    c = second_kind_values(rc, n, sk.t0);
    c[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k)
      if (!(c[k] > 0.0))
        throw std::invalid_argument("second-kind weight q_" + std::to_string(k) + "(" + std::to_string(sk.t0) +
                                    ") = " + std::to_string(c[k]) + " is not positive");
  }
  return WeightSequence(std::move(c));
}

OrthoSeries modified_kernel_series(const ModifiedKernelSpec& spec, std::size_t n) {
  if (n > spec.n_max) throw std::out_of_range("modified_kernel: n exceeds the spec's n_max");
  RecurrenceCoefficients rc = recurrence_coefficients(spec.family, n);
  WeightSequence w = generate_weights(rc, spec.weights, n + 1);
  return OrthoSeries(std::move(rc), std::vector<double>(w.values().begin(), w.values().end()));
}

Polynomial modified_kernel(const ModifiedKernelSpec& spec, std::size_t n) {
  return modified_kernel_series(spec, n).to_polynomial();
}

OrthoSeries sobolev_kernel_series(const Family& family, double c, double t0, std::size_t n) {
  require_positive_c(c);
  require_edge(family, t0);
  RecurrenceCoefficients rc = recurrence_coefficients(family, n);
  std::vector<double> coeffs = orthonormal_values<double>(rc, n, t0);
  for (std::size_t k = 0; k <= n; ++k) coeffs[k] /= family_eigenvalue(family, k, c);
  return OrthoSeries(std::move(rc), std::move(coeffs));
}

OrthoSeries jacobi_sobolev_series(double alpha, double beta, double c, double t0, std::size_t n) {
  return sobolev_kernel_series(Family::jacobi(alpha, beta), c, t0, n);
}

Polynomial jacobi_sobolev_poly(double alpha, double beta, double c, double t0, std::size_t n) {
  return jacobi_sobolev_series(alpha, beta, c, t0, n).to_polynomial();
}

OrthoSeries laguerre_sobolev_series(double alpha, double c, double t0, std::size_t n) {
  return sobolev_kernel_series(Family::laguerre_neg(alpha), c, t0, n);
}

Polynomial laguerre_sobolev_poly(double alpha, double c, double t0, std::size_t n) {
  return laguerre_sobolev_series(alpha, c, t0, n).to_polynomial();
}

Jet chebyshev_t_jet(double c, std::size_t n, double x) {
  require_positive_c(c);
  Jet out{1.0 / (std::numbers::pi * c), 0.0, 0.0};
  // T_{k-1} and T_k with derivatives.
  Jet prev{1.0, 0.0, 0.0};
  Jet cur{x, 1.0, 0.0};
  Jet sum{};
  for (std::size_t k = 1; k <= n; ++k) {
    const double scale = 1.0 / (static_cast<double>(k * k) + c);
    sum.value += scale * cur.value;
    sum.d1 += scale * cur.d1;
    sum.d2 += scale * cur.d2;
    const Jet next{2.0 * x * cur.value - prev.value, 2.0 * cur.value + 2.0 * x * cur.d1 - prev.d1,
                   4.0 * cur.d1 + 2.0 * x * cur.d2 - prev.d2};
    prev = cur;
    cur = next;
  }
  const double two_over_pi = 2.0 / std::numbers::pi;
  out.value += two_over_pi * sum.value;
  out.d1 = two_over_pi * sum.d1;
  out.d2 = two_over_pi * sum.d2;
  return out;
}

double chebyshev_t(double c, std::size_t n, double x) { return chebyshev_t_jet(c, n, x).value; }

ChebyshevBounds chebyshev_bounds_check(double c, std::size_t n, std::size_t grid_size) {
  require_positive_c(c);
  if (grid_size == 0) throw std::invalid_argument("chebyshev_bounds_check: empty grid");
  ChebyshevBounds r;
  const double nn = static_cast<double>(n);
  r.value_bound = 1.0 / (std::numbers::pi * c) + 2.0 * nn / std::numbers::pi;
  r.deriv_bound = 2.0 * nn / std::numbers::pi;
  double inv_sq = 0.0;
  double ratio = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double k2 = static_cast<double>(k * k);
    inv_sq += 1.0 / k2;
    ratio += k2 / (c + k2);
  }
  r.tight_value_bound = 1.0 / (std::numbers::pi * c) + 2.0 / std::numbers::pi * inv_sq;
  r.tight_deriv_bound = 2.0 / std::numbers::pi * ratio;

  auto visit = [&](double x) {
    const Jet j = chebyshev_t_jet(c, n, x);
    r.max_val = std::max(r.max_val, std::abs(j.value));
    r.max_deriv = std::max(r.max_deriv, std::abs(j.d1));
  };
  for (std::size_t i = 0; i < grid_size; ++i) {
    visit(grid_size == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid_size - 1));
    visit(std::cos((2.0 * static_cast<double>(i) + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(grid_size))));
  }
  r.ok = r.max_val <= r.value_bound && r.max_deriv <= r.deriv_bound;
  return r;
}

double quadratic_discriminant(const Polynomial& u2) {
  if (u2.degree() != 2)
    throw std::invalid_argument("quadratic_discriminant: polynomial has degree " + std::to_string(u2.degree()));
  const double a = u2.coefficient(2);
  const double b = u2.coefficient(1);
  const double c = u2.coefficient(0);
  return b * b - 4.0 * a * c;
}

}  // namespace mkp
