#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sortition/outcome.hpp"
#include "sortition/prng.hpp"
#include "sortition/weights.hpp"
#include "sortition/wrs.hpp"

namespace sortition {

enum class Algorithm { stitch, crs, wrs, rec };

const char* algorithm_name(Algorithm alg);
std::optional<Algorithm> algorithm_from_name(const std::string& name);

enum class LambdaKind { exact, lower_bound };

struct DecentralizationReport {
  Algorithm algorithm = Algorithm::stitch;
  double lambda = 0.0;
  LambdaKind lambda_kind = LambdaKind::exact;
  bool feasible = true;
  double adversary_tolerance = 0.0;  // lambda/2
  // algorithm-specific payload: group powers for rec, acceptance data for
  // crs/wrs, the per-participant decentralization floor terms for wrs
  std::vector<double> supporting;
  std::string supporting_label;
};

struct AnalyzeParams {
  std::uint32_t m = 1;
  std::optional<double> alpha;  // wrs only
};

// Deterministic decentralization per algorithm: stitch/crs use M*min(w),
// rec its exact group ratio, wrs the acceptance-weight floor (lower bound).
// Throws feasibility errors for infeasible configurations.
DecentralizationReport lambda_for(Algorithm alg, const WeightVector& w,
                                  const AnalyzeParams& params);
DecentralizationReport lambda_for(Algorithm alg, const IntegerWeightVector& iw,
                                  const AnalyzeParams& params);

// Largest committee size the weight profile admits. stitch: max w < 1/M
// strictly (0 when even M=1 fails). crs: largest M with N > M > 2 and all
// weights inside the feasibility window; 1 when no M >= 3 works. wrs/rec are
// unrestricted and report N.
std::uint32_t m_max(Algorithm alg, const WeightVector& w);

struct FairnessTestResult {
  std::uint64_t trials = 0;
  std::vector<double> mean_power;
  std::vector<double> std_error;
  std::vector<double> deviation;  // mean - target weight
  double max_sigma_deviation = 0.0;
  std::size_t worst_index = 0;
};

using Selector = std::function<SelectionOutcome(PrngStream&)>;

// Runs `trials` independent selections on per-trial substreams of `root` and
// compares mean voting power against `target`. Deterministic for a fixed
// seed regardless of worker count (fixed-size chunks reduced in order).
FairnessTestResult empirical_fairness(const Selector& select, const WeightVector& target,
                                      std::uint64_t trials, PrngStream root);

// Convenience wrapper building the selector for an algorithm.
FairnessTestResult empirical_fairness(Algorithm alg, const WeightVector& w,
                                      const IntegerWeightVector* iw,
                                      const AnalyzeParams& params, std::uint64_t trials,
                                      PrngStream root);

struct HonestMajorityVerdict {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  double max_adversarial_power = 0.0;
  double adversary_weight = 0.0;
  double tolerance = 0.0;  // lambda/2 at the time of the check
  bool ok = true;
};

// Verifies the deterministic honest-majority guarantee: an adversary holding
// at most lambda/2 of the stake can never exceed half the committee power.
// Refuses (PreconditionViolated) when the adversary is over the tolerance.
HonestMajorityVerdict honest_majority_check(const Selector& select,
                                            const DecentralizationReport& report,
                                            const WeightVector& w,
                                            const std::vector<std::uint32_t>& adversary,
                                            std::uint64_t samples, PrngStream root);

}  // namespace sortition
