#ifndef MKP_SOBOLEV_HPP_
#define MKP_SOBOLEV_HPP_

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "mkp/diffop.hpp"
#include "mkp/families.hpp"
#include "mkp/kernels.hpp"
#include "mkp/linalg.hpp"
#include "mkp/polynomial.hpp"
#include "mkp/quadrature.hpp"

namespace mkp {

/**
 * @brief Rank-one 3x3 matrix weight M(x) = v(x) v(x)^T against the base
 * measure (t0 - x) w(x) dx.
 *
 * v holds the coefficient polynomials of the family's second-order operator
 * in the order (f, f', f''), so v(x) . (f, f', f'')(x) = (D f)(x):
 * Jacobi-type families give (c, (a + b + 2) x + a - b, x^2 - 1), the
 * half-line Laguerre family gives (c, a + 1 + x, x).
 */
class MatrixWeight {
 public:
  MatrixWeight(const Family& family, double c, double t0);

  const Family& family() const { return family_; }
  double c() const { return c_; }
  double t0() const { return t0_; }
  const DifferentialOperator& op() const { return op_; }

  std::array<Polynomial, 3> v() const { return {op_.p0, op_.p1, op_.p2}; }
  std::array<double, 3> v_at(double x) const;
  /// M(x) from the entrywise product polynomials v_i v_j.
  DenseMatrix matrix_at(double x) const;
  /// t0 - x, clamped at zero (with a warning) when roundoff puts x past t0.
  double base_factor(double x) const;

 private:
  Family family_;
  double c_;
  double t0_;
  DifferentialOperator op_;
  std::array<std::array<Polynomial, 3>, 3> m_;
};

/**
 * <f, g>_S = int (f, f', f'') M (g, g', g'')^T (t0 - x) w(x) dx, evaluated
 * through the factorisation as sum_i w_i (t0 - x_i) (Df)(x_i) (Dg)(x_i).
 * The rule's exact degree must be at least deg f + deg g + 1.
 * Accumulation is carried out in extended precision.
 */
double sobolev_inner(const MatrixWeight& weight, const Polynomial& f, const Polynomial& g,
                     const QuadratureRule& rule);
double sobolev_inner(const MatrixWeight& weight, const OrthoSeries& f, const OrthoSeries& g,
                     const QuadratureRule& rule);

/// Same integral assembled from the explicit 3x3 matrix at every node.
double sobolev_inner_matrix_form(const MatrixWeight& weight, const Polynomial& f, const Polynomial& g,
                                 const QuadratureRule& rule);

/// int (Df)(Dg)(t0 - x) w dx with D applied in coefficient space.
double operator_inner(const MatrixWeight& weight, const Polynomial& f, const Polynomial& g,
                      const QuadratureRule& rule);

DenseMatrix gram_matrix(const MatrixWeight& weight, std::span<const OrthoSeries> polys, const QuadratureRule& rule);
DenseMatrix gram_matrix(const MatrixWeight& weight, std::span<const Polynomial> polys, const QuadratureRule& rule);

struct GramCertificate {
  double min_diagonal = 0.0;
  double max_off_diagonal = 0.0;
  /// max_{n != m} |G_nm| / min(G_nn, G_mm): each pair against its own 2x2 block.
  double max_pair_ratio = 0.0;
  /// max |G_nm| / min_n G_nn over the whole matrix.
  double global_ratio = 0.0;
  bool positive_diagonal = false;
  bool ok = false;
};

GramCertificate certify_gram(const DenseMatrix& gram, double tol);

/// The Sobolev family u_0..u_n for (family, c, t0) and the N = n + 2 point rule.
std::vector<OrthoSeries> sobolev_family(const Family& family, double c, double t0, std::size_t n_max);

/// Gram matrix of the family's Sobolev polynomials 0..n_max.
DenseMatrix sobolev_gram(const Family& family, double c, double t0, std::size_t n_max);

struct RankOneReport {
  double max_matrix_gap = 0.0;    // |M(x) - v v^T| relative to max |M(x)|
  double max_operator_gap = 0.0;  // |v . (f, f', f'') - (D f)(x)| relative
  double max_spectrum_gap = 0.0;  // eigenvalues of M(x) vs (0, 0, |v|^2)
  bool ok = false;
};

/// Checks the factorisation at the sample points with five seeded random
/// polynomials for the operator identity.
RankOneReport rank_one_factorization_check(const MatrixWeight& weight, std::span<const double> xs,
                                           double tol = 1e-12);

}  // namespace mkp

#endif  // MKP_SOBOLEV_HPP_
