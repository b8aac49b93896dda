#pragma once

#include <cstdint>
#include <vector>

#include "sortition/outcome.hpp"
#include "sortition/prng.hpp"
#include "sortition/weights.hpp"

namespace sortition {

// Weight-sorted participants split into M nearly equal groups; one seat per
// group carrying the group's total stake as its voting power.
struct RecPartition {
  std::vector<std::uint32_t> order;       // participants sorted by (weight, index) ascending
  std::vector<std::uint32_t> group_start; // size M+1, offsets into order
  std::vector<double> group_power;        // per-group stake sums, add up to 1

  std::uint32_t groups() const { return static_cast<std::uint32_t>(group_power.size()); }
};

// Group m (1-based) has floor(N/M) members plus one when N mod M >= m, so
// sizes are non-increasing and differ by at most 1.
RecPartition rec_partition(const WeightVector& w, std::uint32_t m);

// Independently per group: elect one member with probability proportional to
// in-group weight; the seat's raw_g is the group power.
SelectionOutcome rec_select(const WeightVector& w, std::uint32_t m, PrngStream& stream);

// Exact decentralization: min over groups of (lightest group member)/(group power).
double rec_lambda(const WeightVector& w, const RecPartition& part);

}  // namespace sortition
