#pragma once

#include <cstdint>
#include <vector>

#include "sortition/outcome.hpp"
#include "sortition/prng.hpp"
#include "sortition/weights.hpp"
#include "sortition/wide_uint.hpp"

namespace sortition {

struct WrsConfig {
  std::uint32_t m = 3;
  double alpha = 0.5;   // required fraction of total stake, in (0,1)
  std::uint64_t v = 1;  // integer cutoff: committees need raw weight sum >= v
};

// Integer cutoff for "subset stake fraction >= alpha": ceil(alpha*W), except
// that products within 1e-9 relative of an integer round to it (guards
// against 0.05*2000 evaluating to 100.0000000000000055 and ceiling to 101).
std::uint64_t wrs_threshold(double alpha, std::uint64_t total_weight);

WrsConfig make_wrs_config(std::uint32_t m, double alpha, const IntegerWeightVector& iw);

// Exact counts D[k][v] = number of k-subsets with raw weight sum exactly v,
// for v < v_cap, k <= m. The participant dimension of the recurrence is
// rolled; only this final layer is kept.
struct SubsetCountLayer {
  std::uint32_t m = 0;
  std::uint64_t v_cap = 0;
  std::vector<std::vector<U192>> rows;  // rows[k][v]

  // Number of m-subsets with sum < v (v <= v_cap).
  U192 below(std::uint64_t v) const;
};

SubsetCountLayer wrs_count_table(const IntegerWeightVector& iw, std::uint32_t m,
                                 std::uint64_t v_cap);

// C_i = number of m-subsets containing participant i with sum >= v, derived
// from the layer by inclusion-exclusion over how many copies of w_i a
// miscounted subset holds. Requires v <= layer.v_cap. Throws InfeasibleAlpha
// if any C_i is zero.
std::vector<U192> wrs_counts_per_participant(const IntegerWeightVector& iw, std::uint32_t m,
                                             std::uint64_t v, const SubsetCountLayer& layer);

struct WrsWeights {
  std::vector<U192> c;            // qualifying-committee counts C_i
  std::vector<double> p;          // acceptance weights, p_i proportional to w_i/C_i, sum 1
  double acceptance_scale = 0.0;  // sum of the M largest p_i
};

// Strong feasibility (every participant belongs to some qualifying committee)
// has a closed form: min over i of raw_i + (M-1 largest other raws) >= v.
// Returns the worst participant and its best attainable sum.
struct WrsCapacity {
  bool feasible = false;
  std::size_t worst_index = 0;
  std::uint64_t best_attainable = 0;
};
WrsCapacity wrs_strong_feasibility(const IntegerWeightVector& iw, std::uint32_t m,
                                   std::uint64_t v);

WrsWeights wrs_weights(const IntegerWeightVector& iw, const WrsConfig& cfg);

// Variant reusing a prebuilt count layer (cfg.v <= layer.v_cap), for sweeps
// evaluating many alphas against one table.
WrsWeights wrs_weights_from_layer(const IntegerWeightVector& iw, const WrsConfig& cfg,
                                  const SubsetCountLayer& layer);

// Rejection sampling: uniform M-subset, reject immediately when its raw sum
// misses the cutoff (no uniform consumed), else accept with probability
// sum(p)/acceptance_scale. Members get raw_g = p, so voting power is unequal.
SelectionOutcome wrs_select(const IntegerWeightVector& iw, const WrsConfig& cfg,
                            const WrsWeights& ww, PrngStream& stream,
                            std::uint64_t max_rounds = kDefaultMaxRounds);

// Deterministic decentralization floor: min_i w_i * (1 + F_i/p_i), F_i the
// sum of the M-1 smallest acceptance weights besides i. A committee member's
// power p_i/(p_i + rest) is largest when the rest is exactly F_i.
double wrs_lambda_bound(const WeightVector& w, const WrsWeights& ww, std::uint32_t m);

}  // namespace sortition
