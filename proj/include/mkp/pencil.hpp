#ifndef MKP_PENCIL_HPP_
#define MKP_PENCIL_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mkp/families.hpp"
#include "mkp/linalg.hpp"
#include "mkp/polynomial.hpp"
#include "mkp/weights.hpp"

namespace mkp {

/**
 * @brief Jacobi-type pencil (J3, J5, alpha_tilde, beta_tilde).
 *
 * J3 is tridiagonal with diagonal b and off-diagonal a; J5 is symmetric
 * pentadiagonal with diagonal alpha_band, first off-diagonal beta_band and
 * second off-diagonal gamma_band. Index n of every band is row n.
 */
struct JacobiTypePencil {
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> alpha_band;
  std::vector<double> beta_band;
  std::vector<double> gamma_band;
  double alpha_tilde = 0.0;
  double beta_tilde = 0.0;

  std::size_t size() const { return a.size(); }
};

/**
 * Pencil whose associated polynomials are u_n / (c_0 g_0), u_n = sum c_k g_k,
 * from the closed-form band entries. Rows 0..n_max are produced; this needs
 * recurrence entries up to n_max + 1 and weights up to c_{n_max + 2}.
 */
JacobiTypePencil build_pencil_formulas(const RecurrenceCoefficients& rc, const WeightSequence& w,
                                       std::size_t n_max);

struct PencilMatrices {
  BandedMatrix c;   // lower bidiagonal embordering matrix
  BandedMatrix g;   // Jacobi matrix of the orthonormal family
  BandedMatrix j3;  // -C^T C
  BandedMatrix j5;  // -C^T G C
};

/// N x N truncations of C, G and the banded products -C^T C, -C^T G C.
/// Only rows and columns 0..N-3 of the products match the infinite matrices.
PencilMatrices build_pencil_matrices(const RecurrenceCoefficients& rc, const WeightSequence& w, std::size_t n);

/// Largest relative difference between the two construction paths over the
/// interior block (rows and columns 0..N-3) of J3 and J5.
double pencil_path_difference(const JacobiTypePencil& formulas, const PencilMatrices& matrices);

/// p_0..p_N in the monomial basis from p_0 = 1, p_1 = alpha_tilde x + beta_tilde
/// and the five-term recurrence solved for p_{n+2}.
std::vector<Polynomial> associated_polynomials(const JacobiTypePencil& pencil, std::size_t n,
                                               std::size_t cap = kDefaultMonomialCap);

/// p_0(lambda)..p_N(lambda) by the same recurrence run on values.
std::vector<double> associated_values(const JacobiTypePencil& pencil, std::size_t n, double lambda);

struct FiveTermResidual {
  double max_abs = 0.0;
  /// Worst row residual divided by the largest term magnitude in that row.
  double max_relative = 0.0;
};

/// Residual of the five-term relation for rows 0..N-2 over all lambdas;
/// `values[i][n]` holds p_n(lambdas[i]).
FiveTermResidual five_term_residual(const JacobiTypePencil& pencil, std::span<const double> lambdas,
                                    const std::vector<std::vector<double>>& values);

FiveTermResidual five_term_residual(const JacobiTypePencil& pencil, std::span<const Polynomial> polys,
                                    std::span<const double> lambdas);

/// u_k(lambda) / (c_0 g_0) for k = 0..n, summed directly from c_k g_k(lambda).
std::vector<double> normalized_kernel_values(const RecurrenceCoefficients& rc, const WeightSequence& w, std::size_t n,
                                             double lambda);

struct EquivalenceReport {
  /// |p_n - u_n/(c_0 g_0)| over sum_k |c_k g_k| / (c_0 g_0), maximised over n and lambda.
  double max_relative = 0.0;
  double max_abs = 0.0;
  std::size_t worst_n = 0;
  double worst_lambda = 0.0;
};

/**
 * Associated polynomials of the pencil built from (rc, w) against the
 * normalised modified kernel polynomials, n <= n_max, pointwise at lambdas.
 * rc must cover n_max + 1 and w must hold c_0..c_{n_max+2}.
 */
EquivalenceReport pencil_kernel_equivalence(const RecurrenceCoefficients& rc, const WeightSequence& w,
                                            std::size_t n_max, std::span<const double> lambdas);

}  // namespace mkp

#endif  // MKP_PENCIL_HPP_
