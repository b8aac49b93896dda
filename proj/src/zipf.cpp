#include "sortition/zipf.hpp"

#include <cmath>

namespace sortition {

WeightVector zipf_weights(std::uint32_t n, double s) {
  if (n == 0) throw EmptyInput();
  if (s < 0.0) throw SortitionError("zipf exponent must be >= 0");
  std::vector<double> raw(n);
  for (std::uint32_t i = 0; i < n; ++i)
    raw[i] = std::pow(static_cast<double>(i + 1), -s);
  return validate_weights(raw);
}

IntegerWeightVector zipf_integer_weights(std::uint32_t n, double s) {
  if (n == 0) throw EmptyInput();
  if (s < 0.0) throw SortitionError("zipf exponent must be >= 0");
  const double scale = std::pow(static_cast<double>(n), s);
  std::vector<std::uint64_t> raw(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const double value = scale / std::pow(static_cast<double>(i + 1), s);
    const double rounded = std::nearbyint(value);  // ties to even under default rounding
    raw[i] = (rounded < 1.0) ? 1 : static_cast<std::uint64_t>(rounded);
  }
  return validate_integer_weights(raw);
}

}  // namespace sortition
