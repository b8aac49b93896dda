#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sortition {

class SortitionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Configuration rejected before any sampling happened (CLI exit code 2).
class FeasibilityError : public SortitionError {
 public:
  using SortitionError::SortitionError;
};

class EmptyInput : public SortitionError {
 public:
  EmptyInput() : SortitionError("weight list is empty") {}
};

class NonPositiveWeight : public SortitionError {
 public:
  explicit NonPositiveWeight(std::size_t index, double value)
      : SortitionError("weight at index " + std::to_string(index + 1) +
                       " is not strictly positive (" + std::to_string(value) + ")"),
        index(index) {}
  std::size_t index;
};

class SizeExceedsPopulation : public FeasibilityError {
 public:
  SizeExceedsPopulation(std::size_t m, std::size_t n)
      : FeasibilityError("committee size " + std::to_string(m) +
                         " exceeds population " + std::to_string(n)) {}
};

class WeightTooLarge : public FeasibilityError {
 public:
  WeightTooLarge(std::size_t index, double value, std::uint32_t m)
      : FeasibilityError("weight at index " + std::to_string(index + 1) + " (" +
                         std::to_string(value) + ") is >= 1/" + std::to_string(m) +
                         "; duplicate committee slots would be possible"),
        index(index) {}
  std::size_t index;
};

class InfeasibleWeights : public FeasibilityError {
 public:
  using FeasibilityError::FeasibilityError;
};

class InfeasibleAlpha : public FeasibilityError {
 public:
  InfeasibleAlpha(std::size_t index, double alpha, std::uint64_t v,
                  std::uint64_t best_attainable)
      : FeasibilityError("threshold alpha=" + std::to_string(alpha) + " (weight cutoff " +
                         std::to_string(v) + ") leaves participant " +
                         std::to_string(index + 1) + " with no qualifying committee (best " +
                         "attainable sum " + std::to_string(best_attainable) + ")"),
        index(index) {}
  std::size_t index;
};

class RejectionBudgetExhausted : public SortitionError {
 public:
  explicit RejectionBudgetExhausted(std::uint64_t rounds)
      : SortitionError("no committee accepted after " + std::to_string(rounds) +
                       " rejection-sampling rounds") {}
};

class TooLargeForEnumeration : public SortitionError {
 public:
  using SortitionError::SortitionError;
};

class PreconditionViolated : public SortitionError {
 public:
  using SortitionError::SortitionError;
};

class CountOverflow : public SortitionError {
 public:
  using SortitionError::SortitionError;
};

class InputFormatError : public SortitionError {
 public:
  using SortitionError::SortitionError;
};

}  // namespace sortition
