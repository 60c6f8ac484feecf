#ifndef MKP_INTEGRALREP_HPP_
#define MKP_INTEGRALREP_HPP_

#include <cstddef>
#include <stdexcept>

namespace mkp {

/// Raised when an argument leaves the range where a series or a truncated
/// integral is trusted.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecialFnConfig {
  /// Series stop once |term| <= series_tol * |partial sum|.
  double series_tol = 1e-17;
  /// Outer cutoff T satisfies e^{-T} T^p <= tail_tol * max_t e^{-t} t^p.
  double tail_tol = 1e-16;
  /// The ascending series is used up to here; beyond it cancellation costs
  /// roughly e^z / z units of the extended-precision epsilon.
  double bessel_series_max_z = 12.0;
  /// Largest Bessel argument accepted at all.
  double bessel_max_z = 60.0;
  /// Outer integral: Gauss-Legendre panels in s = sqrt(t) and nodes per panel.
  std::size_t outer_panels = 24;
  std::size_t outer_rule_size = 20;
  /// Inner integral over [0, t]: Gauss-Legendre node count.
  std::size_t inner_rule_size = 16;
};

/// (x)_k = x (x + 1) ... (x + k - 1).
double pochhammer(double x, std::size_t k);

/**
 * J_nu(z): ascending series accumulated in extended precision for
 * z <= cfg.bessel_series_max_z, std::cyl_bessel_j above that.
 * Requires nu > -1 and 0 <= z <= cfg.bessel_max_z (ConvergenceError above).
 */
double bessel_j(double nu, double z, const SpecialFnConfig& cfg = {});

/**
 * Terminating 2F0(-n, 1; ; -1/theta) = sum_k n!/(n-k)! theta^{-k}. At
 * theta = 0 the limit of theta^n 2F0 / n! (which is 1) is meaningful, the
 * bare value is not, so theta = 0 throws std::domain_error.
 */
double hyp2f0_terminating(std::size_t n, double theta);

/// Generalised Laguerre L_n^alpha(y) by the three-term recurrence.
double laguerre_l(std::size_t n, double alpha, double y);

/// Cutoff T for the weight e^{-t} t^p.
double outer_cutoff(double p, const SpecialFnConfig& cfg);

/**
 * L_n^alpha(-x) for x < 0 from
 *   (1/n!) e^{-x} (-x)^{-alpha/2} int_0^inf e^{-t} t^{n+alpha/2} J_alpha(2 sqrt(-t x)) dt.
 */
double laguerre_via_bessel(double alpha, std::size_t n, double x, const SpecialFnConfig& cfg = {});

struct PartialSumForms {
  double direct = 0.0;    // sum_{k<=n} t^k / ((k + c) k!)
  double integral = 0.0;  // (1/n!) t^{-c} int_0^t theta^{n+c-1} 2F0(-n,1;;-1/theta) dtheta
};

/// Both forms of f_n(c; t); c a positive integer, t > 0.
PartialSumForms f_n_partial_sum(int c, std::size_t n, double t, const SpecialFnConfig& cfg = {});

/// (1/Gamma(alpha+1)) sum_{k<=n} L_k^alpha(-x) / (k + c).
double sobolev_laguerre_closed_form(double alpha, double c, std::size_t n, double x);

/**
 * L_n(alpha, c, 0; x) for x < 0 and integer c >= 1 from the double integral
 *   (1/(Gamma(alpha+1) n!)) e^{-x} (-x)^{-alpha/2}
 *     int_0^inf int_0^t e^{-t} t^{alpha/2-c} theta^{n+c-1} J_alpha(2 sqrt(-t x))
 *                       2F0(-n,1;;-1/theta) dtheta dt.
 * The theta = 0 endpoint is taken by continuity.
 */
double sobolev_laguerre_integral_rep(double alpha, int c, std::size_t n, double x, const SpecialFnConfig& cfg = {});

struct IntegralRepComparison {
  double integral = 0.0;
  double closed_form = 0.0;
  /// |closed form|, or sum_k |L_k^alpha(-x)| / ((k + c) Gamma(alpha + 1)) when
  /// the closed form cancels to below 1e-12 of that sum (it is exactly 0 at
  /// e.g. alpha = 2, c = 1, n = 1, x = -5).
  double scale = 0.0;
  double relative_error = 0.0;
};

IntegralRepComparison compare_integral_rep(double alpha, int c, std::size_t n, double x,
                                           const SpecialFnConfig& cfg = {});

}  // namespace mkp

#endif  // MKP_INTEGRALREP_HPP_
