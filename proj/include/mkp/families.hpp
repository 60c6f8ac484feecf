#ifndef MKP_FAMILIES_HPP_
#define MKP_FAMILIES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "mkp/polynomial.hpp"

namespace mkp {

enum class FamilyKind { jacobi, laguerre_neg, chebyshev1 };

/**
 * @brief Classical orthonormal family on the real line.
 *
 *  - jacobi(a, b): weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1;
 *  - laguerre_neg(a): weight (-x)^a e^x on (-inf, 0], a > -1, i.e. the
 *    Laguerre family reflected through the origin with the sign of odd
 *    members flipped so leading coefficients stay positive;
 *  - chebyshev1(): weight (1-x^2)^(-1/2), the Jacobi(-1/2, -1/2) case with
 *    its own closed-form recurrence.
 */
class Family {
 public:
  static Family jacobi(double alpha, double beta);
  static Family laguerre_neg(double alpha);
  static Family chebyshev1();

  FamilyKind kind() const { return kind_; }
  /// Jacobi-type families report (alpha, beta); Chebyshev reports (-1/2, -1/2).
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  bool is_jacobi_type() const { return kind_ != FamilyKind::laguerre_neg; }

  double support_lower() const;
  double support_upper() const;
  /// Right end of the support; kernel evaluation points must not lie below it.
  double support_edge() const { return support_upper(); }

  std::string name() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Family(FamilyKind kind, double alpha, double beta) : kind_(kind), alpha_(alpha), beta_(beta) {}

  FamilyKind kind_;
  double alpha_;
  double beta_;
};

/**
 * Coefficients of x g_n = a_{n-1} g_{n-1} + b_n g_n + a_n g_{n+1} for the
 * orthonormal family, with g_0 = 1/sqrt(mu0) the constant member.
 * Entries 0..n_max are stored, so g_0..g_{n_max+1} can be evaluated.
 */
struct RecurrenceCoefficients {
  Family family;
  std::vector<double> a_hat;
  std::vector<double> b_hat;
  double mu0 = 0.0;
  double g0 = 0.0;
  /// Extended-precision copies; the long double evaluators use them when present.
  std::vector<long double> a_hat_ext;
  std::vector<long double> b_hat_ext;
  long double g0_ext = 0.0L;

  std::size_t size() const { return a_hat.size(); }
  /// Highest index n for which g_n can be evaluated.
  std::size_t max_degree() const { return a_hat.size(); }
};

RecurrenceCoefficients recurrence_coefficients(const Family& family, std::size_t n_max);

/// Total mass of the Jacobi weight, 2^(a+b+1) B(a+1, b+1).
double jacobi_mass(double alpha, double beta);
double log_beta(double a, double b);

/**
 * Values and first two derivatives of g_0..g_n at x, obtained by running the
 * three-term recurrence and its once and twice differentiated forms together.
 */
namespace detail {

template <typename T>
struct RecurrenceView {
  explicit RecurrenceView(const RecurrenceCoefficients& rc) : rc_(rc) {
    if constexpr (std::is_same_v<T, long double>)
      ext_ = rc.a_hat_ext.size() == rc.a_hat.size() && rc.b_hat_ext.size() == rc.b_hat.size();
  }
  T a(std::size_t k) const { return ext_ ? static_cast<T>(rc_.a_hat_ext[k]) : static_cast<T>(rc_.a_hat[k]); }
  T b(std::size_t k) const { return ext_ ? static_cast<T>(rc_.b_hat_ext[k]) : static_cast<T>(rc_.b_hat[k]); }
  T g0() const { return ext_ ? static_cast<T>(rc_.g0_ext) : static_cast<T>(rc_.g0); }

 private:
  const RecurrenceCoefficients& rc_;
  bool ext_ = false;
};

}  // namespace detail

template <typename T>
std::vector<BasicJet<T>> orthonormal_jets(const RecurrenceCoefficients& rc, std::size_t n, T x) {
  if (n > rc.max_degree()) throw std::out_of_range("orthonormal_jets: degree beyond recurrence coverage");
  const detail::RecurrenceView<T> view(rc);
  std::vector<BasicJet<T>> out(n + 1);
  out[0] = {view.g0(), T(0), T(0)};
  for (std::size_t k = 0; k < n; ++k) {
    const T a = view.a(k);
    const T shift = x - view.b(k);
    const BasicJet<T>& cur = out[k];
    BasicJet<T> prev{};
    T a_prev = T(0);
    if (k > 0) {
      prev = out[k - 1];
      a_prev = view.a(k - 1);
    }
    out[k + 1].value = (shift * cur.value - a_prev * prev.value) / a;
    out[k + 1].d1 = (shift * cur.d1 + cur.value - a_prev * prev.d1) / a;
    out[k + 1].d2 = (shift * cur.d2 + T(2) * cur.d1 - a_prev * prev.d2) / a;
  }
  return out;
}

/// Values g_0(x)..g_n(x).
template <typename T>
std::vector<T> orthonormal_values(const RecurrenceCoefficients& rc, std::size_t n, T x) {
  if (n > rc.max_degree()) throw std::out_of_range("orthonormal_values: degree beyond recurrence coverage");
  const detail::RecurrenceView<T> view(rc);
  std::vector<T> out(n + 1);
  out[0] = view.g0();
  for (std::size_t k = 0; k < n; ++k) {
    const T prev = k > 0 ? view.a(k - 1) * out[k - 1] : T(0);
    out[k + 1] = ((x - view.b(k)) * out[k] - prev) / view.a(k);
  }
  return out;
}

/// (g_n(x), g_n'(x), g_n''(x)).
Jet orthonormal_eval2(const RecurrenceCoefficients& rc, std::size_t n, double x);

inline constexpr std::size_t kDefaultMonomialCap = 40;

/// Monomial coefficients of g_n. Refuses n above `cap`, where the monomial
/// basis is too ill-conditioned to be useful.
Polynomial orthonormal_coeffs(const RecurrenceCoefficients& rc, std::size_t n,
                              std::size_t cap = kDefaultMonomialCap);

/// Monomial coefficients of g_0..g_n.
std::vector<Polynomial> orthonormal_basis(const RecurrenceCoefficients& rc, std::size_t n,
                                          std::size_t cap = kDefaultMonomialCap);

}  // namespace mkp

#endif  // MKP_FAMILIES_HPP_
