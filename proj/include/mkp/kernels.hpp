#ifndef MKP_KERNELS_HPP_
#define MKP_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "mkp/families.hpp"
#include "mkp/polynomial.hpp"
#include "mkp/weights.hpp"

namespace mkp {

/**
 * @brief Polynomial held as an expansion sum_k coeffs[k] g_k in an orthonormal
 * family. Evaluation goes through the three-term recurrence, so it stays
 * accurate at degrees where the monomial basis does not.
 */
class OrthoSeries {
 public:
  OrthoSeries(RecurrenceCoefficients rc, std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coefficients() const { return coeffs_; }
  const RecurrenceCoefficients& recurrence() const { return rc_; }

  double operator()(double x) const { return jet_as<double>(x).value; }
  Jet jet(double x) const { return jet_as<double>(x); }

  template <typename T>
  BasicJet<T> jet_as(T x) const {
    BasicJet<T> acc{};
    if (coeffs_.empty()) return acc;
    const auto g = orthonormal_jets<T>(rc_, coeffs_.size() - 1, x);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const T c = static_cast<T>(coeffs_[k]);
      acc.value += c * g[k].value;
      acc.d1 += c * g[k].d1;
      acc.d2 += c * g[k].d2;
    }
    return acc;
  }

  Polynomial to_polynomial(std::size_t cap = kDefaultMonomialCap) const;

 private:
  RecurrenceCoefficients rc_;
  std::vector<double> coeffs_;
};

/// K_n(t, x) = sum_{k<=n} g_k(t) g_k(x).
double kernel_poly(const RecurrenceCoefficients& rc, double t, std::size_t n, double x);

/// Christoffel-Darboux value a_n g_n(t0) g_{n+1}(t0) of int K_n(t0, x)^2 (t0 - x) dmu.
double kernel_diagonal_closed_form(const RecurrenceCoefficients& rc, double t0, std::size_t n);

/// c_k given explicitly.
struct ExplicitWeights {
  WeightSequence c;
};
/// c_k = g_k(t0), t0 at or beyond the right end of the support.
struct PlainKernel {
  double t0;
};
/// c_k = g_k(t0) / l_k with l_k the eigenvalue of the family's operator shifted by c.
struct EigScaledKernel {
  double c;
  double t0;
};
/// c_0 = 1, c_k = q_k(t0) for the second-kind solution q.
struct SecondKind {
  double t0;
};

using WeightRule = std::variant<ExplicitWeights, PlainKernel, EigScaledKernel, SecondKind>;

struct ModifiedKernelSpec {
  Family family;
  WeightRule weights;
  std::size_t n_max = 0;
};

/// c_0..c_{count-1} for the rule. Throws std::invalid_argument on parameter
/// violations or when a generated weight is not strictly positive (the message
/// names the first failing index).
WeightSequence generate_weights(const RecurrenceCoefficients& rc, const WeightRule& rule, std::size_t count);

/// u_n = sum_{k<=n} c_k g_k.
OrthoSeries modified_kernel_series(const ModifiedKernelSpec& spec, std::size_t n);
Polynomial modified_kernel(const ModifiedKernelSpec& spec, std::size_t n);

/**
 * Second-kind solution q_n(t) of the three-term recurrence with
 * q_0 = 0, q_1 = 1 / (a_0 g_0). With this start the Casoratian
 * a_n (g_{n+1} q_n - g_n q_{n+1}) equals -1 for every n.
 */
double second_kind_eval(const RecurrenceCoefficients& rc, std::size_t n, double t);
std::vector<double> second_kind_values(const RecurrenceCoefficients& rc, std::size_t n, double t);

/// sum_{k<=n} g_k(t0) g_k / l_{k,c} for the family's own eigenvalues
/// (Jacobi-type: c + k(k + a + b + 1); half-line Laguerre: c + k).
OrthoSeries sobolev_kernel_series(const Family& family, double c, double t0, std::size_t n);

OrthoSeries jacobi_sobolev_series(double alpha, double beta, double c, double t0, std::size_t n);
Polynomial jacobi_sobolev_poly(double alpha, double beta, double c, double t0, std::size_t n);
OrthoSeries laguerre_sobolev_series(double alpha, double c, double t0, std::size_t n);
Polynomial laguerre_sobolev_poly(double alpha, double c, double t0, std::size_t n);

/// t_n(c; x) = 1/(pi c) + (2/pi) sum_{k=1..n} T_k(x) / (k^2 + c), T_k by recurrence.
double chebyshev_t(double c, std::size_t n, double x);
Jet chebyshev_t_jet(double c, std::size_t n, double x);

struct ChebyshevBounds {
  double max_val = 0.0;
  double max_deriv = 0.0;
  double value_bound = 0.0;        // 1/(pi c) + 2n/pi
  double deriv_bound = 0.0;        // 2n/pi
  double tight_value_bound = 0.0;  // 1/(pi c) + (2/pi) sum 1/k^2
  double tight_deriv_bound = 0.0;  // (2/pi) sum k^2/(c + k^2)
  bool ok = false;
};

/// Max |t_n| and |t_n'| over a uniform grid of `grid_size` points on [-1, 1]
/// together with the same number of Chebyshev points.
ChebyshevBounds chebyshev_bounds_check(double c, std::size_t n, std::size_t grid_size);

/// B^2 - 4AC for A x^2 + B x + C; throws unless the degree is exactly 2.
double quadratic_discriminant(const Polynomial& u2);

}  // namespace mkp

#endif  // MKP_KERNELS_HPP_
