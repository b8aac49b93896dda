#pragma once

#include <cstdint>

#include "sortition/weights.hpp"

namespace sortition {

// Power-law stake profile: participant i carries weight proportional to
// 1/i^s. s=0 is uniform; larger s concentrates stake at the top.
WeightVector zipf_weights(std::uint32_t n, double s);

// Integer variant: raw weight round-half-even(N^s / i^s), floored at 1 so
// every participant keeps positive stake.
IntegerWeightVector zipf_integer_weights(std::uint32_t n, double s);

}  // namespace sortition
