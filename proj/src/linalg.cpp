#include "mkp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mkp {

BandedMatrix::BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper)
    : n_(n), lower_(lower), upper_(upper), diags_(lower + upper + 1, std::vector<double>(n, 0.0)) {}

bool BandedMatrix::in_band(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return false;
  return j + lower_ >= i && i + upper_ >= j;
}

double BandedMatrix::operator()(std::size_t i, std::size_t j) const {
  if (!in_band(i, j)) return 0.0;
  return diags_[j + lower_ - i][i];
}

void BandedMatrix::set(std::size_t i, std::size_t j, double v) {
  if (!in_band(i, j)) throw std::out_of_range("BandedMatrix::set outside band");
  diags_[j + lower_ - i][i] = v;
}

std::vector<double> BandedMatrix::diagonal(long offset) const {
  std::vector<double> out;
  for (std::size_t i = 0; i < n_; ++i) {
    const long j = static_cast<long>(i) + offset;
    if (j < 0 || j >= static_cast<long>(n_)) continue;
    out.push_back((*this)(i, static_cast<std::size_t>(j)));
  }
  return out;
}

BandedMatrix BandedMatrix::transposed() const {
  BandedMatrix t(n_, upper_, lower_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i >= lower_ ? i - lower_ : 0; j <= std::min(n_ - 1, i + upper_); ++j)
      t.set(j, i, (*this)(i, j));
  return t;
}

BandedMatrix BandedMatrix::scaled(double s) const {
  BandedMatrix out = *this;
  for (auto& d : out.diags_)
    for (double& v : d) v *= s;
  return out;
}

bool BandedMatrix::is_symmetric(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_ && j <= i + std::max(lower_, upper_); ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

BandedMatrix operator*(const BandedMatrix& lhs, const BandedMatrix& rhs) {
  if (lhs.n_ != rhs.n_) throw std::invalid_argument("BandedMatrix product: size mismatch");
  const std::size_t n = lhs.n_;
  BandedMatrix out(n, lhs.lower_ + rhs.lower_, lhs.upper_ + rhs.upper_);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k_lo = i >= lhs.lower_ ? i - lhs.lower_ : 0;
    const std::size_t k_hi = std::min(n - 1, i + lhs.upper_);
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      const std::size_t j_lo = k >= rhs.lower_ ? k - rhs.lower_ : 0;
      const std::size_t j_hi = std::min(n - 1, k + rhs.upper_);
      for (std::size_t j = j_lo; j <= j_hi; ++j) out.diags_[j + out.lower_ - i][i] += a * rhs(k, j);
    }
  }
  return out;
}

TridiagonalEigen tridiagonal_eigen(std::span<const double> diag, std::span<const double> offdiag,
                                   int max_iter) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n) throw std::invalid_argument("tridiagonal_eigen: off-diagonal length must be n - 1");

  constexpr double kDeflate = 1e-14;
  std::vector<double> d(diag.begin(), diag.end());
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kDeflate * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_iter) throw std::runtime_error("tridiagonal_eigen: QL iteration did not converge");

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        const double zf = z[i + 1];
        z[i + 1] = s * z[i] + c * zf;
        z[i] = c * z[i] - s * zf;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  TridiagonalEigen out;
  out.values.reserve(n);
  out.first_components.reserve(n);
  for (std::size_t i : order) {
    out.values.push_back(d[i]);
    out.first_components.push_back(z[i]);
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("symmetric_eigenvalues: matrix must be square");
  DenseMatrix a = m;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a(i, j) * a(i, j);
        if (i != j) off += a(i, j) * a(i, j);
      }
    if (off <= 1e-30 * total || off == 0.0) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace mkp
