#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace aml {

/// Dense node identifier; accounts are interned once at graph build time.
using NodeId = std::int32_t;

constexpr NodeId kNoNode = -1;

// Error taxonomy: the CLI maps all of these to exit code 1 with a
// stage-tagged message; usage problems are handled by the parser (exit 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// exp() with the exponent clamped to [-bound, bound]. Every exponential
/// weight in the pipeline goes through this, which bounds all weight
/// factors to [e^-bound, e^+bound] regardless of how heavy-tailed the
/// standardized inputs are.
inline double clamped_exp(double exponent, double bound = 30.0) {
  return std::exp(std::clamp(exponent, -bound, bound));
}

/// Population standardization: (x - mean) / sigma with sigma the
/// population standard deviation. A constant series (sigma == 0) maps to
/// all zeros. Throws ConfigError on empty input.
std::vector<double> standardize(const std::vector<double>& values);

/// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per
/// worker. Chunk boundaries depend only on n and the worker count, and
/// workers never share output slots, so results are identical for any
/// worker count.
void parallel_for(std::int64_t n, int workers,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace aml
