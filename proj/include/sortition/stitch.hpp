#pragma once

#include <cstdint>
#include <vector>

#include "sortition/outcome.hpp"
#include "sortition/prng.hpp"
#include "sortition/weights.hpp"

namespace sortition {

struct StitchConfig {
  std::uint32_t m = 1;
  bool permute_first = false;  // optional shuffle of the interval layout
};

// Cumulative interval boundaries for the given participant order:
// boundaries[0] = 0, boundaries[n] forced to exactly 1. Participant
// order[j] owns the half-open interval [boundaries[j], boundaries[j+1]).
std::vector<double> stitch_boundaries(const WeightVector& w,
                                      const std::vector<std::uint32_t>& order);

// Participant (position in `order`) owning the point x in [0,1).
std::uint32_t stitch_locate(const std::vector<double>& boundaries, double x);

// Committee hit by the M evenly spaced points {x + i/M mod 1}; returns
// positions into the layout order, sorted ascending.
std::vector<std::uint32_t> stitch_committee_at(const std::vector<double>& boundaries,
                                               std::uint32_t m, double x);

// Requires max_i w_i < 1/M strictly (throws WeightTooLarge otherwise).
// Every member gets voting power exactly 1/M.
SelectionOutcome stitch_select(const WeightVector& w, const StitchConfig& cfg,
                               PrngStream& stream);

// Exact E[voting power] by integrating the committee map over the stitch
// offset: boundaries reduced mod 1/M split [0,1/M) into segments on which the
// committee is constant.
std::vector<double> stitch_exact_expected_power(const WeightVector& w, std::uint32_t m);

// Throws WeightTooLarge unless max_i w_i < 1/M strictly.
void stitch_require_feasible(const WeightVector& w, std::uint32_t m);

}  // namespace sortition
