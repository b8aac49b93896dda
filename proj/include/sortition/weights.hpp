#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sortition/errors.hpp"

namespace sortition {

inline constexpr double kUnitSumTolerance = 1e-12;

// Normalized stake weights: strictly positive, sum to 1.
struct WeightVector {
  std::vector<double> w;

  std::size_t size() const { return w.size(); }
  double min_weight() const;
  double max_weight() const;
  // Verifies positivity and unit sum; throws on violation.
  void check() const;
};

// Positive integer stake units plus their exact total.
struct IntegerWeightVector {
  std::vector<std::uint64_t> raw;
  std::uint64_t total = 0;

  std::size_t size() const { return raw.size(); }
  WeightVector normalized() const;
};

// Divides by the sum; order preserved. Throws NonPositiveWeight / EmptyInput.
WeightVector validate_weights(const std::vector<double>& raw);

IntegerWeightVector validate_integer_weights(const std::vector<std::uint64_t>& raw);

// CSV with header `id,weight`, one row per participant; row order defines the
// participant index. Real-valued weights.
WeightVector load_weight_csv(const std::string& path);

// Same format, weights must be positive integers.
IntegerWeightVector load_integer_weight_csv(const std::string& path);

}  // namespace sortition
