#include "mkp/families.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mkp {

Family Family::jacobi(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0))
    throw std::invalid_argument("Jacobi family requires alpha > -1 and beta > -1");
  return Family(FamilyKind::jacobi, alpha, beta);
}

Family Family::laguerre_neg(double alpha) {
  if (!(alpha > -1.0)) throw std::invalid_argument("Laguerre family requires alpha > -1");
  return Family(FamilyKind::laguerre_neg, alpha, 0.0);
}

Family Family::chebyshev1() { return Family(FamilyKind::chebyshev1, -0.5, -0.5); }

double Family::support_lower() const {
  return kind_ == FamilyKind::laguerre_neg ? -std::numeric_limits<double>::infinity() : -1.0;
}

double Family::support_upper() const { return kind_ == FamilyKind::laguerre_neg ? 0.0 : 1.0; }

std::string Family::name() const {
  std::ostringstream os;
  switch (kind_) {
    case FamilyKind::jacobi:
      os << "jacobi(" << alpha_ << "," << beta_ << ")";
      break;
    case FamilyKind::laguerre_neg:
      os << "laguerre(" << alpha_ << ")";
      break;
    case FamilyKind::chebyshev1:
      os << "chebyshev";
      break;
  }
  return os.str();
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

double jacobi_mass(double alpha, double beta) {
  return std::exp((alpha + beta + 1.0) * std::numbers::ln2 + log_beta(alpha + 1.0, beta + 1.0));
}

namespace {

// Monic Jacobi recurrence p_{n+1} = (x - b_n) p_n - A_n p_{n-1}.
template <typename T>
T jacobi_monic_b(std::size_t n, T a, T b) {
  if (n == 0) return (b - a) / (a + b + T(2));
  const T s = T(2) * static_cast<T>(n) + a + b;
  return (b * b - a * a) / (s * (s + T(2)));
}

template <typename T>
T jacobi_monic_A(std::size_t n, T a, T b) {
  if (n == 1) {
    // The general form is 0/0 when a + b = -1; cancel the (1 + a + b) factor.
    const T s = T(2) + a + b;
    return T(4) * (T(1) + a) * (T(1) + b) / (s * s * (s + T(1)));
  }
  const T nn = static_cast<T>(n);
  const T s = T(2) * nn + a + b;
  return T(4) * nn * (nn + a) * (nn + b) * (nn + a + b) / (s * s * (s + T(1)) * (s - T(1)));
}

}  // namespace

RecurrenceCoefficients recurrence_coefficients(const Family& family, std::size_t n_max) {
  using Ext = long double;
  RecurrenceCoefficients rc{family, std::vector<double>(n_max + 1), std::vector<double>(n_max + 1), 0.0, 0.0,
                            std::vector<Ext>(n_max + 1), std::vector<Ext>(n_max + 1), 0.0L};
  Ext mu0 = 0.0L;
  const Ext a = family.alpha();
  const Ext b = family.beta();
  switch (family.kind()) {
    case FamilyKind::chebyshev1:
      for (std::size_t n = 0; n <= n_max; ++n) {
        rc.a_hat_ext[n] = n == 0 ? std::sqrt(0.5L) : 0.5L;
        rc.b_hat_ext[n] = 0.0L;
      }
      mu0 = std::numbers::pi_v<Ext>;
      break;
    case FamilyKind::jacobi:
      for (std::size_t n = 0; n <= n_max; ++n) {
        rc.a_hat_ext[n] = std::sqrt(jacobi_monic_A<Ext>(n + 1, a, b));
        rc.b_hat_ext[n] = jacobi_monic_b<Ext>(n, a, b);
      }
      mu0 = std::exp((a + b + 1.0L) * std::numbers::ln2_v<Ext> + std::lgamma(a + 1.0L) + std::lgamma(b + 1.0L) -
                     std::lgamma(a + b + 2.0L));
      break;
    case FamilyKind::laguerre_neg:
      for (std::size_t n = 0; n <= n_max; ++n) {
        const Ext nn = static_cast<Ext>(n);
        rc.a_hat_ext[n] = std::sqrt((nn + 1.0L) * (nn + a + 1.0L));
        rc.b_hat_ext[n] = -(2.0L * nn + a + 1.0L);
      }
      mu0 = std::tgamma(a + 1.0L);
      break;
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    rc.a_hat[n] = static_cast<double>(rc.a_hat_ext[n]);
    rc.b_hat[n] = static_cast<double>(rc.b_hat_ext[n]);
  }
  rc.g0_ext = 1.0L / std::sqrt(mu0);
  rc.mu0 = static_cast<double>(mu0);
  rc.g0 = static_cast<double>(rc.g0_ext);
  return rc;
}

Jet orthonormal_eval2(const RecurrenceCoefficients& rc, std::size_t n, double x) {
  return orthonormal_jets<double>(rc, n, x)[n];
}

std::vector<Polynomial> orthonormal_basis(const RecurrenceCoefficients& rc, std::size_t n, std::size_t cap) {
  if (n > cap) throw std::out_of_range("orthonormal_basis: degree exceeds monomial coefficient cap");
  if (n > rc.max_degree()) throw std::out_of_range("orthonormal_basis: degree beyond recurrence coverage");
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  out.push_back(Polynomial::constant(rc.g0));
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = Polynomial::linear(1.0, -rc.b_hat[k]) * out[k];
    if (k > 0) next -= rc.a_hat[k - 1] * out[k - 1];
    next *= 1.0 / rc.a_hat[k];
    out.push_back(std::move(next));
  }
  return out;
}

Polynomial orthonormal_coeffs(const RecurrenceCoefficients& rc, std::size_t n, std::size_t cap) {
  return orthonormal_basis(rc, n, cap).back();
}

}  // namespace mkp
