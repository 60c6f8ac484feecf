#include "mkp/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mkp {

JacobiTypePencil build_pencil_formulas(const RecurrenceCoefficients& rc, const WeightSequence& w,
                                       std::size_t n_max) {
  if (rc.size() < n_max + 2) throw std::out_of_range("build_pencil_formulas: recurrence must cover n_max + 1");
  if (w.size() < n_max + 3) throw std::out_of_range("build_pencil_formulas: weights must cover c_{n_max+2}");
  const auto& ah = rc.a_hat;
  const auto& bh = rc.b_hat;

  JacobiTypePencil p;
  const std::size_t rows = n_max + 1;
  p.a.resize(rows);
  p.b.resize(rows);
  p.alpha_band.resize(rows);
  p.beta_band.resize(rows);
  p.gamma_band.resize(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    const double c0 = w[n];
    const double c1 = w[n + 1];
    const double c2 = w[n + 2];
    p.a[n] = 1.0 / (c1 * c1);
    p.b[n] = -1.0 / (c0 * c0) - 1.0 / (c1 * c1);
    p.alpha_band[n] = 2.0 * ah[n] / (c0 * c1) - bh[n] / (c0 * c0) - bh[n + 1] / (c1 * c1);
    p.beta_band[n] = bh[n + 1] / (c1 * c1) - ah[n + 1] / (c1 * c2) - ah[n] / (c0 * c1);
    p.gamma_band[n] = ah[n + 1] / (c1 * c2);
  }
  p.alpha_tilde = w[1] / (w[0] * ah[0]);
  p.beta_tilde = 1.0 - w[1] * bh[0] / (w[0] * ah[0]);
  return p;
}

PencilMatrices build_pencil_matrices(const RecurrenceCoefficients& rc, const WeightSequence& w, std::size_t n) {
  if (n < 3) throw std::invalid_argument("build_pencil_matrices: truncation order must be at least 3");
  if (w.size() < n) throw std::out_of_range("build_pencil_matrices: weights must cover the truncation");
  if (rc.size() < n) throw std::out_of_range("build_pencil_matrices: recurrence must cover the truncation");

  BandedMatrix c(n, 1, 0);
  BandedMatrix g(n, 1, 1);
  for (std::size_t i = 0; i < n; ++i) {
    c.set(i, i, 1.0 / w[i]);
    if (i + 1 < n) c.set(i + 1, i, -1.0 / w[i + 1]);
    g.set(i, i, rc.b_hat[i]);
    if (i + 1 < n) {
      g.set(i + 1, i, rc.a_hat[i]);
      g.set(i, i + 1, rc.a_hat[i]);
    }
  }
  const BandedMatrix ct = c.transposed();
  BandedMatrix j3 = (ct * c).scaled(-1.0);
  BandedMatrix j5 = (ct * (g * c)).scaled(-1.0);
  return {std::move(c), std::move(g), std::move(j3), std::move(j5)};
}

namespace {

double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

}  // namespace

double pencil_path_difference(const JacobiTypePencil& formulas, const PencilMatrices& m) {
  const std::size_t n = m.j3.size();
  const std::size_t interior = n - 2;  // rows/cols 0..n-3
  if (formulas.size() < interior) throw std::out_of_range("pencil_path_difference: formula pencil too short");
  double worst = 0.0;
  for (std::size_t i = 0; i < interior; ++i) {
    for (std::size_t j = 0; j < interior; ++j) {
      const std::size_t lo = std::min(i, j);
      const std::size_t gap = std::max(i, j) - lo;
      double f3 = 0.0;
      double f5 = 0.0;
      if (gap == 0) {
        f3 = formulas.b[lo];
        f5 = formulas.alpha_band[lo];
      } else if (gap == 1) {
        f3 = formulas.a[lo];
        f5 = formulas.beta_band[lo];
      } else if (gap == 2) {
        f5 = formulas.gamma_band[lo];
      }
      worst = std::max({worst, rel_diff(f3, m.j3(i, j)), rel_diff(f5, m.j5(i, j))});
    }
  }
  return worst;
}

namespace {

void require_positive_gamma(const JacobiTypePencil& p, std::size_t n) {
  if (!(p.gamma_band[n] > 0.0))
    throw std::domain_error("malformed pencil: gamma_" + std::to_string(n) + " is not positive");
}

}  // namespace

std::vector<Polynomial> associated_polynomials(const JacobiTypePencil& pencil, std::size_t n, std::size_t cap) {
  if (n > cap) throw std::out_of_range("associated_polynomials: degree exceeds monomial coefficient cap");
  if (n >= 2 && pencil.size() < n - 1) throw std::out_of_range("associated_polynomials: pencil bands too short");
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(1.0));
  if (n == 0) return p;
  p.push_back(Polynomial::linear(pencil.alpha_tilde, pencil.beta_tilde));
  for (std::size_t row = 0; row + 2 <= n; ++row) {
    require_positive_gamma(pencil, row);
    Polynomial acc = Polynomial::linear(-pencil.b[row], pencil.alpha_band[row]) * p[row];
    acc += Polynomial::linear(-pencil.a[row], pencil.beta_band[row]) * p[row + 1];
    if (row >= 1) acc += Polynomial::linear(-pencil.a[row - 1], pencil.beta_band[row - 1]) * p[row - 1];
    if (row >= 2) acc += pencil.gamma_band[row - 2] * p[row - 2];
    p.push_back(acc * (-1.0 / pencil.gamma_band[row]));
  }
  return p;
}

std::vector<double> associated_values(const JacobiTypePencil& pencil, std::size_t n, double lambda) {
  if (n >= 2 && pencil.size() < n - 1) throw std::out_of_range("associated_values: pencil bands too short");
  std::vector<double> p;
  p.reserve(n + 1);
  p.push_back(1.0);
  if (n == 0) return p;
  p.push_back(pencil.alpha_tilde * lambda + pencil.beta_tilde);
  for (std::size_t row = 0; row + 2 <= n; ++row) {
    require_positive_gamma(pencil, row);
    double acc = (pencil.alpha_band[row] - lambda * pencil.b[row]) * p[row] +
                 (pencil.beta_band[row] - lambda * pencil.a[row]) * p[row + 1];
    if (row >= 1) acc += (pencil.beta_band[row - 1] - lambda * pencil.a[row - 1]) * p[row - 1];
    if (row >= 2) acc += pencil.gamma_band[row - 2] * p[row - 2];
    p.push_back(-acc / pencil.gamma_band[row]);
  }
  return p;
}

FiveTermResidual five_term_residual(const JacobiTypePencil& pencil, std::span<const double> lambdas,
                                    const std::vector<std::vector<double>>& values) {
  FiveTermResidual r;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double lam = lambdas[i];
    const auto& p = values.at(i);
    if (p.size() < 3) continue;
    const std::size_t last_row = p.size() - 3;
    if (pencil.size() <= last_row) throw std::out_of_range("five_term_residual: pencil bands too short");
    for (std::size_t n = 0; n <= last_row; ++n) {
      double terms[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
      if (n >= 2) terms[0] = pencil.gamma_band[n - 2] * p[n - 2];
      if (n >= 1) terms[1] = (pencil.beta_band[n - 1] - lam * pencil.a[n - 1]) * p[n - 1];
      terms[2] = (pencil.alpha_band[n] - lam * pencil.b[n]) * p[n];
      terms[3] = (pencil.beta_band[n] - lam * pencil.a[n]) * p[n + 1];
      terms[4] = pencil.gamma_band[n] * p[n + 2];
      double sum = 0.0;
      double scale = 0.0;
      for (double t : terms) {
        sum += t;
        scale = std::max(scale, std::abs(t));
      }
      r.max_abs = std::max(r.max_abs, std::abs(sum));
      if (scale > 0.0) r.max_relative = std::max(r.max_relative, std::abs(sum) / scale);
    }
  }
  return r;
}

FiveTermResidual five_term_residual(const JacobiTypePencil& pencil, std::span<const Polynomial> polys,
                                    std::span<const double> lambdas) {
  std::vector<std::vector<double>> values;
  values.reserve(lambdas.size());
  for (double lam : lambdas) {
    std::vector<double> row;
    row.reserve(polys.size());
    for (const auto& p : polys) row.push_back(p(lam));
    values.push_back(std::move(row));
  }
  return five_term_residual(pencil, lambdas, values);
}

std::vector<double> normalized_kernel_values(const RecurrenceCoefficients& rc, const WeightSequence& w, std::size_t n,
                                             double lambda) {
  if (w.size() < n + 1) throw std::out_of_range("normalized_kernel_values: weights too short");
  const auto g = orthonormal_values<double>(rc, n, lambda);
  const double norm = w[0] * rc.g0;
  std::vector<double> out(n + 1);
  double u = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    u += w[k] * g[k];
    out[k] = u / norm;
  }
  return out;
}

EquivalenceReport pencil_kernel_equivalence(const RecurrenceCoefficients& rc, const WeightSequence& w,
                                            std::size_t n_max, std::span<const double> lambdas) {
  const JacobiTypePencil pencil = build_pencil_formulas(rc, w, n_max);
  EquivalenceReport r;
  for (double lam : lambdas) {
    const auto p = associated_values(pencil, n_max, lam);
    const auto g = orthonormal_values<double>(rc, n_max, lam);
    const double norm = w[0] * rc.g0;
    double u = 0.0;
    double scale = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
      u += w[n] * g[n];
      scale += std::abs(w[n] * g[n]);
      const double diff = std::abs(p[n] - u / norm);
      const double rel = diff / (scale / norm);
      r.max_abs = std::max(r.max_abs, diff);
      if (rel > r.max_relative) {
        r.max_relative = rel;
        r.worst_n = n;
        r.worst_lambda = lam;
      }
    }
  }
  return r;
}

}  // namespace mkp
