#include "mkp/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>

namespace mkp {

MatrixWeight::MatrixWeight(const Family& family, double c, double t0)
    : family_(family), c_(c), t0_(t0), op_(DifferentialOperator::for_family(family, c)) {
  if (!(c > 0.0)) throw std::invalid_argument("matrix weight requires c > 0");
  if (!(t0 >= family.support_edge()))
    throw std::invalid_argument("matrix weight requires t0 >= " + std::to_string(family.support_edge()) + " for " +
                                family.name());
  const auto vv = v();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m_[i][j] = vv[i] * vv[j];
}

std::array<double, 3> MatrixWeight::v_at(double x) const { return {op_.p0(x), op_.p1(x), op_.p2(x)}; }

DenseMatrix MatrixWeight::matrix_at(double x) const {
  DenseMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = m_[i][j](x);
  return m;
}

double MatrixWeight::base_factor(double x) const {
  const double f = t0_ - x;
  if (f < 0.0) {
    std::clog << "warning: node " << x << " lies beyond t0 = " << t0_ << "; base factor clamped to 0\n";
    return 0.0;
  }
  return f;
}

namespace {

using Ext = long double;

void require_degree(const QuadratureRule& rule, int deg_f, int deg_g) {
  if (rule.exact_degree < deg_f + deg_g + 1)
    throw std::invalid_argument("sobolev_inner: rule exact to degree " + std::to_string(rule.exact_degree) +
                                ", integrand needs " + std::to_string(deg_f + deg_g + 1));
}

void require_family(const MatrixWeight& weight, const QuadratureRule& rule) {
  if (!(rule.family == weight.family()))
    throw std::invalid_argument("sobolev_inner: quadrature rule built for a different weight");
}

bool has_ext(const QuadratureRule& rule) {
  return rule.nodes_ext.size() == rule.size() && rule.weights_ext.size() == rule.size();
}

Ext node_at(const QuadratureRule& rule, std::size_t i) {
  return has_ext(rule) ? rule.nodes_ext[i] : static_cast<Ext>(rule.nodes[i]);
}

template <typename F>
std::vector<Ext> operator_values(const MatrixWeight& weight, const F& f, const QuadratureRule& rule) {
  std::vector<Ext> out(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Ext x = node_at(rule, i);
    out[i] = weight.op().apply(f.template jet_as<Ext>(x), x);
  }
  return out;
}

double accumulate(const MatrixWeight& weight, const QuadratureRule& rule, const std::vector<Ext>& df,
                  const std::vector<Ext>& dg) {
  const bool ext = has_ext(rule);
  Ext sum = 0.0L;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Ext w = ext ? rule.weights_ext[i] : static_cast<Ext>(rule.weights[i]);
    Ext base = static_cast<Ext>(weight.t0()) - node_at(rule, i);
    if (base < 0.0L) base = weight.base_factor(rule.nodes[i]);
    sum += w * base * df[i] * dg[i];
  }
  return static_cast<double>(sum);
}

template <typename F>
DenseMatrix gram_impl(const MatrixWeight& weight, std::span<const F> polys, const QuadratureRule& rule) {
  require_family(weight, rule);
  int max_deg = -1;
  for (const auto& p : polys) max_deg = std::max(max_deg, p.degree());
  require_degree(rule, max_deg, max_deg);
  std::vector<std::vector<Ext>> values;
  values.reserve(polys.size());
  for (const auto& p : polys) values.push_back(operator_values(weight, p, rule));
  DenseMatrix g(polys.size(), polys.size());
  for (std::size_t n = 0; n < polys.size(); ++n)
    for (std::size_t m = n; m < polys.size(); ++m) {
      g(n, m) = accumulate(weight, rule, values[n], values[m]);
      g(m, n) = g(n, m);
    }
  return g;
}

}  // namespace

double sobolev_inner(const MatrixWeight& weight, const Polynomial& f, const Polynomial& g, const QuadratureRule& rule) {
  require_family(weight, rule);
  require_degree(rule, f.degree(), g.degree());
  return accumulate(weight, rule, operator_values(weight, f, rule), operator_values(weight, g, rule));
}

double sobolev_inner(const MatrixWeight& weight, const OrthoSeries& f, const OrthoSeries& g,
                     const QuadratureRule& rule) {
  require_family(weight, rule);
  require_degree(rule, f.degree(), g.degree());
  return accumulate(weight, rule, operator_values(weight, f, rule), operator_values(weight, g, rule));
}

double sobolev_inner_matrix_form(const MatrixWeight& weight, const Polynomial& f, const Polynomial& g,
                                 const QuadratureRule& rule) {
  require_family(weight, rule);
  require_degree(rule, f.degree(), g.degree());
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    const Jet jf = f.jet(x);
    const Jet jg = g.jet(x);
    const std::array<double, 3> vf{jf.value, jf.d1, jf.d2};
    const std::array<double, 3> vg{jg.value, jg.d1, jg.d2};
    const DenseMatrix m = weight.matrix_at(x);
    double q = 0.0;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t s = 0; s < 3; ++s) q += vf[r] * m(r, s) * vg[s];
    sum += rule.weights[i] * weight.base_factor(x) * q;
  }
  return sum;
}

double operator_inner(const MatrixWeight& weight, const Polynomial& f, const Polynomial& g,
                      const QuadratureRule& rule) {
  require_family(weight, rule);
  require_degree(rule, f.degree(), g.degree());
  const Polynomial df = weight.op().apply(f);
  const Polynomial dg = weight.op().apply(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    sum += rule.weights[i] * weight.base_factor(x) * df(x) * dg(x);
  }
  return sum;
}

DenseMatrix gram_matrix(const MatrixWeight& weight, std::span<const OrthoSeries> polys, const QuadratureRule& rule) {
  return gram_impl(weight, polys, rule);
}

DenseMatrix gram_matrix(const MatrixWeight& weight, std::span<const Polynomial> polys, const QuadratureRule& rule) {
  return gram_impl(weight, polys, rule);
}

GramCertificate certify_gram(const DenseMatrix& gram, double tol) {
  GramCertificate cert;
  const std::size_t n = gram.rows();
  if (n == 0) return cert;
  cert.positive_diagonal = true;
  cert.min_diagonal = gram(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cert.positive_diagonal = cert.positive_diagonal && gram(i, i) > 0.0;
    cert.min_diagonal = std::min(cert.min_diagonal, gram(i, i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double off = std::abs(gram(i, j));
      cert.max_off_diagonal = std::max(cert.max_off_diagonal, off);
      const double block_min = std::min(gram(i, i), gram(j, j));
      if (block_min > 0.0) cert.max_pair_ratio = std::max(cert.max_pair_ratio, off / block_min);
    }
  if (cert.min_diagonal > 0.0) cert.global_ratio = cert.max_off_diagonal / cert.min_diagonal;
  cert.ok = cert.positive_diagonal && cert.max_pair_ratio <= tol;
  return cert;
}

std::vector<OrthoSeries> sobolev_family(const Family& family, double c, double t0, std::size_t n_max) {
  const OrthoSeries full = sobolev_kernel_series(family, c, t0, n_max);
  std::vector<OrthoSeries> out;
  out.reserve(n_max + 1);
  const auto coeffs = full.coefficients();
  for (std::size_t n = 0; n <= n_max; ++n)
    out.emplace_back(full.recurrence(), std::vector<double>(coeffs.begin(), coeffs.begin() + static_cast<long>(n + 1)));
  return out;
}

DenseMatrix sobolev_gram(const Family& family, double c, double t0, std::size_t n_max) {
  const MatrixWeight weight(family, c, t0);
  const auto polys = sobolev_family(family, c, t0, n_max);
  const std::size_t nodes = n_max + 2;
  const QuadratureRule rule = gauss_rule(recurrence_coefficients(family, nodes), nodes);
  return gram_matrix(weight, std::span<const OrthoSeries>(polys), rule);
}

RankOneReport rank_one_factorization_check(const MatrixWeight& weight, std::span<const double> xs, double tol) {
  RankOneReport r;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<Polynomial> probes;
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<double> c(2 + k);
    for (double& v : c) v = coef(rng);
    probes.emplace_back(std::move(c));
  }
  std::vector<Polynomial> images;
  for (const auto& p : probes) images.push_back(weight.op().apply(p));

  for (double x : xs) {
    const auto v = weight.v_at(x);
    const DenseMatrix m = weight.matrix_at(x);
    double scale = 0.0;
    double gap = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        scale = std::max(scale, std::abs(m(i, j)));
        gap = std::max(gap, std::abs(m(i, j) - v[i] * v[j]));
      }
    if (scale > 0.0) r.max_matrix_gap = std::max(r.max_matrix_gap, gap / scale);

    const double norm2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    const auto ev = symmetric_eigenvalues(m);
    const double spectrum_gap = std::max({std::abs(ev[0]), std::abs(ev[1]), std::abs(ev[2] - norm2)});
    if (norm2 > 0.0) r.max_spectrum_gap = std::max(r.max_spectrum_gap, spectrum_gap / norm2);

    for (std::size_t k = 0; k < probes.size(); ++k) {
      const Jet j = probes[k].jet(x);
      const double via_v = v[0] * j.value + v[1] * j.d1 + v[2] * j.d2;
      const double direct = images[k](x);
      const double s = std::max({std::abs(v[0] * j.value), std::abs(v[1] * j.d1), std::abs(v[2] * j.d2), 1e-300});
      r.max_operator_gap = std::max(r.max_operator_gap, std::abs(via_v - direct) / s);
    }
  }
  r.ok = r.max_matrix_gap <= tol && r.max_operator_gap <= tol && r.max_spectrum_gap <= tol;
  return r;
}

}  // namespace mkp
