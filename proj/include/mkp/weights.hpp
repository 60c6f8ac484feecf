#ifndef MKP_WEIGHTS_HPP_
#define MKP_WEIGHTS_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkp {

/// Strictly positive coefficients c_0, c_1, ... of a modified kernel polynomial.
class WeightSequence {
 public:
  WeightSequence() = default;
  explicit WeightSequence(std::vector<double> c) : c_(std::move(c)) {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!(c_[k] > 0.0))
        throw std::invalid_argument("weight sequence entry c_" + std::to_string(k) + " = " + std::to_string(c_[k]) +
                                    " is not strictly positive");
  }

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t k) const { return c_[k]; }
  std::span<const double> values() const { return c_; }
  /// First n entries.
  WeightSequence head(std::size_t n) const {
    if (n > c_.size()) throw std::out_of_range("WeightSequence::head beyond length");
    return WeightSequence(std::vector<double>(c_.begin(), c_.begin() + static_cast<long>(n)));
  }

 private:
  std::vector<double> c_;
};

}  // namespace mkp

#endif  // MKP_WEIGHTS_HPP_
