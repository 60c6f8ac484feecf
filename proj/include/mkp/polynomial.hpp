#ifndef MKP_POLYNOMIAL_HPP_
#define MKP_POLYNOMIAL_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mkp {

/// Value of a function together with its first two derivatives at one point.
template <typename T>
struct BasicJet {
  T value{};
  T d1{};
  T d2{};
};

using Jet = BasicJet<double>;

/**
 * @brief Real polynomial stored densely in the monomial basis.
 *
 * Coefficient k multiplies x^k. Trailing zero coefficients are trimmed on
 * every construction, so the last stored coefficient is the leading one and
 * the empty coefficient vector is the zero polynomial (degree -1).
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial constant(double c);
  static Polynomial monomial(double c, std::size_t k);
  /// Linear polynomial slope * x + intercept.
  static Polynomial linear(double slope, double intercept);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero beyond the degree.
  double coefficient(std::size_t k) const;
  double leading() const;

  double operator()(double x) const;
  /// Horner evaluation of value, first and second derivative.
  Jet jet(double x) const;

  template <typename T>
  BasicJet<T> jet_as(T x) const {
    BasicJet<T> j{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      j.d2 = j.d2 * x + T(2) * j.d1;
      j.d1 = j.d1 * x + j.value;
      j.value = j.value * x + static_cast<T>(*it);
    }
    return j;
  }

  Polynomial derivative() const;
  /// p(x + s).
  Polynomial shifted(double s) const;
  /// p(-x).
  Polynomial reflected() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
  friend Polynomial operator*(double s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= -1.0; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<double> coeffs_;
};

double poly_eval(const Polynomial& p, double x);
Polynomial poly_derivative(const Polynomial& p);

/// Largest absolute coefficient; 0 for the zero polynomial.
double max_abs_coefficient(const Polynomial& p);

}  // namespace mkp

#endif  // MKP_POLYNOMIAL_HPP_
