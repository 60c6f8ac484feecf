#ifndef MKP_LINALG_HPP_
#define MKP_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace mkp {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/**
 * @brief Square N x N matrix with `lower` subdiagonals and `upper`
 * superdiagonals. Entries outside the band read as exactly zero and cannot
 * be written.
 */
class BandedMatrix {
 public:
  BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper);

  std::size_t size() const { return n_; }
  std::size_t lower() const { return lower_; }
  std::size_t upper() const { return upper_; }
  std::size_t bandwidth() const { return lower_ + upper_ + 1; }

  double operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double v);
  bool in_band(std::size_t i, std::size_t j) const;

  /// Entries (i, i + offset) for i in range.
  std::vector<double> diagonal(long offset) const;

  BandedMatrix transposed() const;
  BandedMatrix scaled(double s) const;
  bool is_symmetric(double tol = 0.0) const;

  friend BandedMatrix operator*(const BandedMatrix& lhs, const BandedMatrix& rhs);

 private:
  std::size_t n_;
  std::size_t lower_;
  std::size_t upper_;
  // diags_[offset + lower_][i] holds entry (i, i + offset).
  std::vector<std::vector<double>> diags_;
};

struct TridiagonalEigen {
  std::vector<double> values;            // ascending
  std::vector<double> first_components;  // first row of the orthonormal eigenvector matrix
};

/**
 * Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` and
 * off-diagonal `offdiag` (length n - 1) by implicit-shift QL iteration,
 * accumulating only the first component of each eigenvector.
 * Throws std::runtime_error when an eigenvalue needs more than `max_iter`
 * sweeps.
 */
TridiagonalEigen tridiagonal_eigen(std::span<const double> diag, std::span<const double> offdiag,
                                   int max_iter = 60);

/// Eigenvalues (ascending) of a small dense symmetric matrix by cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

}  // namespace mkp

#endif  // MKP_LINALG_HPP_
