#include "sortition/crs.hpp"

#include <algorithm>
#include <cmath>

namespace sortition {

CrsFeasibility crs_feasible(const WeightVector& w, std::uint32_t m) {
  CrsFeasibility out;
  const auto n = w.size();
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  if (!(n > m)) {
    out.reason = "population must exceed committee size";
    return out;
  }
  if (m <= 2) {
    out.reason = "committee size must be at least 3";
    return out;
  }
  out.lower = (dm - 1.0) / (dm * (dn - 1.0));
  out.upper = (dn - 2.0 * dm + dm * dm) / (dm * dm * (dn - 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (w.w[i] < out.lower) {
      out.bad_index = static_cast<std::int64_t>(i);
      out.reason = "weight " + std::to_string(w.w[i]) + " at index " + std::to_string(i + 1) +
                   " below window [" + std::to_string(out.lower) + ", " +
                   std::to_string(out.upper) + "]";
      return out;
    }
    if (w.w[i] > out.upper) {
      out.bad_index = static_cast<std::int64_t>(i);
      out.reason = "weight " + std::to_string(w.w[i]) + " at index " + std::to_string(i + 1) +
                   " above window [" + std::to_string(out.lower) + ", " +
                   std::to_string(out.upper) + "]";
      return out;
    }
  }
  out.feasible = true;
  return out;
}

CrsWeights crs_weights(const WeightVector& w, std::uint32_t m) {
  const auto feas = crs_feasible(w, m);
  if (!feas.feasible) throw InfeasibleWeights(feas.reason);
  const double dn = static_cast<double>(w.size());
  const double dm = static_cast<double>(m);
  const double slope = dm * (dn - 1.0) / (dn - dm);
  const double offset = (dm - 1.0) / (dn - dm);
  CrsWeights out;
  out.p.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out.p[i] = std::max(0.0, slope * w.w[i] - offset);

  // scale = sum of the M largest p_i, accumulated smallest-first
  std::vector<double> sorted = out.p;
  std::nth_element(sorted.begin(), sorted.end() - m, sorted.end());
  std::sort(sorted.end() - m, sorted.end());
  double scale = 0.0;
  for (auto it = sorted.end() - m; it != sorted.end(); ++it) scale += *it;
  out.acceptance_scale = scale;
  return out;
}

SelectionOutcome crs_select(const WeightVector& w, std::uint32_t m, PrngStream& stream,
                            std::uint64_t max_rounds) {
  if (max_rounds == 0) throw SortitionError("max_rounds must be at least 1");
  const auto cw = crs_weights(w, m);
  const auto n = static_cast<std::uint32_t>(w.size());
  for (std::uint64_t round = 1; round <= max_rounds; ++round) {
    const auto subset = sample_uniform_subset(stream, n, m);
    const double u = stream.unit() * cw.acceptance_scale;
    double total = 0.0;
    for (auto j : subset) total += cw.p[j];
    if (u < total) {
      SelectionOutcome out;
      out.members = subset;
      out.raw_g.assign(m, 1.0);
      normalize_outcome(out);
      out.rounds_used = round;
      return out;
    }
  }
  throw RejectionBudgetExhausted(max_rounds);
}

}  // namespace sortition
