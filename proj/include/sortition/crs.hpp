#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sortition/outcome.hpp"
#include "sortition/prng.hpp"
#include "sortition/weights.hpp"

namespace sortition {

// Why a weight window: the affine map from stake to acceptance weight must
// land every p_i in [0, 1/M], which pins each w_i inside
// [(M-1)/(M(N-1)), (N-2M+M^2)/(M^2(N-1))] and needs N > M > 2.
struct CrsFeasibility {
  bool feasible = false;
  double lower = 0.0;  // weight window, inclusive
  double upper = 0.0;
  std::int64_t bad_index = -1;  // first offending participant, -1 if none
  std::string reason;           // empty when feasible
};

CrsFeasibility crs_feasible(const WeightVector& w, std::uint32_t m);

struct CrsWeights {
  std::vector<double> p;         // per-participant acceptance weights, sum to 1
  double acceptance_scale = 0.0;  // sum of the M largest p_i
};

// p_i = M(N-1)/(N-M) * w_i - (M-1)/(N-M); throws InfeasibleWeights (with the
// window diagnostic) when crs_feasible fails.
CrsWeights crs_weights(const WeightVector& w, std::uint32_t m);

// Rejection sampling: uniform M-subset, accept with probability
// sum(p over subset)/acceptance_scale. Members all get power 1/M.
SelectionOutcome crs_select(const WeightVector& w, std::uint32_t m, PrngStream& stream,
                            std::uint64_t max_rounds = kDefaultMaxRounds);

}  // namespace sortition
