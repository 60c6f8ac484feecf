#include "mkp/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mkp {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial(std::vector<double>{c}); }

Polynomial Polynomial::monomial(double c, std::size_t k) {
  std::vector<double> coeffs(k + 1, 0.0);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(double slope, double intercept) {
  return Polynomial(std::vector<double>{intercept, slope});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : 0.0;
}

double Polynomial::leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Jet Polynomial::jet(double x) const { return jet_as<double>(x); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(double s) const {
  // Horner in polynomial arithmetic: q <- q * (x + s) + c_k.
  const Polynomial step = Polynomial::linear(1.0, s);
  Polynomial q;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    q = q * step;
    q += Polynomial::constant(*it);
  }
  return q;
}

Polynomial Polynomial::reflected() const {
  std::vector<double> r = coeffs_;
  for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

double poly_eval(const Polynomial& p, double x) { return p(x); }

Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

double max_abs_coefficient(const Polynomial& p) {
  double m = 0.0;
  for (double c : p.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace mkp
