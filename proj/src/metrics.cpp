#include "sortition/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sortition/crs.hpp"
#include "sortition/parallel.hpp"
#include "sortition/rec.hpp"
#include "sortition/stitch.hpp"

namespace sortition {

namespace {

// Slack absorbing float normalization noise in hard >/<= comparisons against
// exactly representable guarantees (1/2, lambda/2).
constexpr double kGuaranteeSlack = 1e-12;

constexpr std::uint64_t kFairnessChunk = 4096;

}  // namespace

const char* algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::stitch: return "stitch";
    case Algorithm::crs: return "crs";
    case Algorithm::wrs: return "wrs";
    case Algorithm::rec: return "rec";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "stitch") return Algorithm::stitch;
  if (name == "crs") return Algorithm::crs;
  if (name == "wrs") return Algorithm::wrs;
  if (name == "rec") return Algorithm::rec;
  return std::nullopt;
}

DecentralizationReport lambda_for(Algorithm alg, const WeightVector& w,
                                  const AnalyzeParams& params) {
  DecentralizationReport report;
  report.algorithm = alg;
  switch (alg) {
    case Algorithm::stitch: {
      stitch_require_feasible(w, params.m);
      report.lambda = static_cast<double>(params.m) * w.min_weight();
      report.lambda_kind = LambdaKind::exact;
      break;
    }
    case Algorithm::crs: {
      const auto cw = crs_weights(w, params.m);  // throws InfeasibleWeights
      report.lambda = static_cast<double>(params.m) * w.min_weight();
      report.lambda_kind = LambdaKind::exact;
      report.supporting = cw.p;
      report.supporting_label = "acceptance_weights";
      break;
    }
    case Algorithm::rec: {
      const auto part = rec_partition(w, params.m);
      report.lambda = rec_lambda(w, part);
      report.lambda_kind = LambdaKind::exact;
      report.supporting = part.group_power;
      report.supporting_label = "group_powers";
      break;
    }
    case Algorithm::wrs:
      throw SortitionError("wrs analysis needs integer weights and alpha");
  }
  report.feasible = true;
  report.adversary_tolerance = report.lambda / 2.0;
  return report;
}

DecentralizationReport lambda_for(Algorithm alg, const IntegerWeightVector& iw,
                                  const AnalyzeParams& params) {
  if (alg != Algorithm::wrs) return lambda_for(alg, iw.normalized(), params);
  if (!params.alpha) throw SortitionError("wrs analysis needs --alpha");
  const auto cfg = make_wrs_config(params.m, *params.alpha, iw);
  const auto ww = wrs_weights(iw, cfg);
  const auto w = iw.normalized();

  DecentralizationReport report;
  report.algorithm = alg;
  report.lambda = wrs_lambda_bound(w, ww, params.m);
  report.lambda_kind = LambdaKind::lower_bound;
  report.feasible = true;
  report.adversary_tolerance = report.lambda / 2.0;
  report.supporting = ww.p;
  report.supporting_label = "acceptance_weights";
  return report;
}

std::uint32_t m_max(Algorithm alg, const WeightVector& w) {
  const auto n = static_cast<std::uint32_t>(w.size());
  switch (alg) {
    case Algorithm::stitch: {
      const double max_w = w.max_weight();
      // strict max w < 1/M; when 1/max_w is an exact integer K this yields K-1
      auto candidate = static_cast<std::uint32_t>(1.0 / max_w) + 2;
      candidate = std::min(candidate, n);
      while (candidate >= 1 && !(max_w < 1.0 / static_cast<double>(candidate))) --candidate;
      return candidate;
    }
    case Algorithm::crs: {
      if (n >= 4) {
        const double min_w = w.min_weight();
        const double max_w = w.max_weight();
        for (std::uint32_t m = n - 1; m >= 3; --m) {
          const double dn = n, dm = m;
          const double lower = (dm - 1.0) / (dm * (dn - 1.0));
          const double upper = (dn - 2.0 * dm + dm * dm) / (dm * dm * (dn - 1.0));
          if (min_w >= lower && max_w <= upper) return m;
        }
      }
      return 1;  // degenerate single-seat committee is always possible
    }
    case Algorithm::wrs:
    case Algorithm::rec:
      return n;  // no structural cap; any committee size can be configured
  }
  return 0;
}

FairnessTestResult empirical_fairness(const Selector& select, const WeightVector& target,
                                      std::uint64_t trials, PrngStream root) {
  if (trials < 1000) throw PreconditionViolated("fairness estimation needs >= 1000 trials");
  const std::size_t n = target.size();

  const std::uint64_t chunks = (trials + kFairnessChunk - 1) / kFairnessChunk;
  std::vector<std::vector<double>> sums(chunks), sq_sums(chunks);

  parallel_for_chunks(chunks, [&](std::uint64_t c) {
    std::vector<double> sum(n, 0.0), sq(n, 0.0);
    const std::uint64_t begin = c * kFairnessChunk;
    const std::uint64_t end = std::min(trials, begin + kFairnessChunk);
    for (std::uint64_t t = begin; t < end; ++t) {
      PrngStream stream = root.substream(t);
      const auto outcome = select(stream);
      for (std::size_t k = 0; k < outcome.members.size(); ++k) {
        const double g = outcome.voting_power[k];
        sum[outcome.members[k]] += g;
        sq[outcome.members[k]] += g * g;
      }
    }
    sums[c] = std::move(sum);
    sq_sums[c] = std::move(sq);
  });

  std::vector<double> sum(n, 0.0), sq(n, 0.0);
  for (std::uint64_t c = 0; c < chunks; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      sum[i] += sums[c][i];
      sq[i] += sq_sums[c][i];
    }

  FairnessTestResult result;
  result.trials = trials;
  result.mean_power.resize(n);
  result.std_error.resize(n);
  result.deviation.resize(n);
  const double t = static_cast<double>(trials);
  for (std::size_t i = 0; i < n; ++i) {
    const double mean = sum[i] / t;
    const double variance = std::max(0.0, (sq[i] - t * mean * mean) / (t - 1.0));
    const double se = std::sqrt(variance / t);
    result.mean_power[i] = mean;
    result.std_error[i] = se;
    result.deviation[i] = mean - target.w[i];
    double sigma;
    if (se > 0.0)
      sigma = std::abs(result.deviation[i]) / se;
    else
      sigma = (std::abs(result.deviation[i]) <= 1e-12) ? 0.0
                                                       : std::numeric_limits<double>::infinity();
    if (sigma >= result.max_sigma_deviation) {
      result.max_sigma_deviation = sigma;
      result.worst_index = i;
    }
  }
  return result;
}

FairnessTestResult empirical_fairness(Algorithm alg, const WeightVector& w,
                                      const IntegerWeightVector* iw,
                                      const AnalyzeParams& params, std::uint64_t trials,
                                      PrngStream root) {
  Selector select;
  switch (alg) {
    case Algorithm::stitch: {
      stitch_require_feasible(w, params.m);
      const StitchConfig cfg{params.m, false};
      select = [w, cfg](PrngStream& s) { return stitch_select(w, cfg, s); };
      break;
    }
    case Algorithm::crs: {
      crs_weights(w, params.m);  // fail fast
      const auto m = params.m;
      select = [w, m](PrngStream& s) { return crs_select(w, m, s); };
      break;
    }
    case Algorithm::rec: {
      const auto m = params.m;
      rec_partition(w, m);  // fail fast
      select = [w, m](PrngStream& s) { return rec_select(w, m, s); };
      break;
    }
    case Algorithm::wrs: {
      if (!iw || !params.alpha) throw SortitionError("wrs fairness needs integer weights and alpha");
      const auto cfg = make_wrs_config(params.m, *params.alpha, *iw);
      const auto ww = wrs_weights(*iw, cfg);
      const IntegerWeightVector weights = *iw;
      select = [weights, cfg, ww](PrngStream& s) { return wrs_select(weights, cfg, ww, s); };
      break;
    }
  }
  return empirical_fairness(select, w, trials, root);
}

HonestMajorityVerdict honest_majority_check(const Selector& select,
                                            const DecentralizationReport& report,
                                            const WeightVector& w,
                                            const std::vector<std::uint32_t>& adversary,
                                            std::uint64_t samples, PrngStream root) {
  HonestMajorityVerdict verdict;
  verdict.samples = samples;
  verdict.tolerance = report.adversary_tolerance;
  double adv_weight = 0.0;
  std::vector<char> is_adversary(w.size(), 0);
  for (auto a : adversary) {
    if (a >= w.size()) throw SortitionError("adversary index out of range");
    if (is_adversary[a]) throw SortitionError("duplicate adversary index");
    is_adversary[a] = 1;
    adv_weight += w.w[a];
  }
  verdict.adversary_weight = adv_weight;
  if (adv_weight > verdict.tolerance + kGuaranteeSlack)
    throw PreconditionViolated("adversary stake " + std::to_string(adv_weight) +
                               " exceeds lambda/2 = " + std::to_string(verdict.tolerance) +
                               "; the guarantee does not apply");

  for (std::uint64_t t = 0; t < samples; ++t) {
    PrngStream stream = root.substream(t);
    const auto outcome = select(stream);
    double power = 0.0;
    for (std::size_t k = 0; k < outcome.members.size(); ++k)
      if (is_adversary[outcome.members[k]]) power += outcome.voting_power[k];
    verdict.max_adversarial_power = std::max(verdict.max_adversarial_power, power);
    if (power > 0.5 + kGuaranteeSlack) ++verdict.violations;
  }
  verdict.ok = verdict.violations == 0;
  return verdict;
}

}  // namespace sortition
