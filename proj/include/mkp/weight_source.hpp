#ifndef MKP_WEIGHT_SOURCE_HPP_
#define MKP_WEIGHT_SOURCE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mkp/families.hpp"
#include "mkp/kernels.hpp"
#include "mkp/weights.hpp"

namespace mkp {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/**
 * Parsed form of a weight-source string:
 *   ones | kernel:t0=<v> | eigkernel:c=<v>,t0=<v> | secondkind:t0=<v>
 *   | file:<path> | random:seed=<s>
 */
struct WeightSource {
  enum class Kind { ones, kernel, eigkernel, secondkind, file, random };
  Kind kind = Kind::ones;
  double t0 = 1.0;
  double c = 1.0;
  std::string path;
  std::uint64_t seed = kDefaultSeed;

  std::string describe() const;
};

/// Throws std::invalid_argument with a message naming the offending token.
WeightSource parse_weight_source(std::string_view text);

/**
 * Positive reals from a CSV/whitespace file. One optional non-numeric header
 * line is skipped; a nonpositive or unparsable entry throws
 * std::invalid_argument naming its zero-based index.
 */
std::vector<double> read_weight_file(const std::string& path);

/// c_0..c_{count-1} for the given family.
WeightSequence materialize_weights(const WeightSource& src, const RecurrenceCoefficients& rc, std::size_t count);

/// Uniform draws in [0.5, 2] from mt19937_64.
std::vector<double> random_weights(std::uint64_t seed, std::size_t count);

}  // namespace mkp

#endif  // MKP_WEIGHT_SOURCE_HPP_
