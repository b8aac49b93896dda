#include "sortition/rec.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sortition {

RecPartition rec_partition(const WeightVector& w, std::uint32_t m) {
  const auto n = static_cast<std::uint32_t>(w.size());
  if (m == 0) throw SortitionError("committee size must be at least 1");
  if (m > n) throw SizeExceedsPopulation(m, n);

  RecPartition part;
  part.order.resize(n);
  std::iota(part.order.begin(), part.order.end(), 0u);
  std::sort(part.order.begin(), part.order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (w.w[a] != w.w[b]) return w.w[a] < w.w[b];
    return a < b;
  });

  part.group_start.resize(m + 1);
  part.group_power.resize(m);
  const std::uint32_t base = n / m;
  const std::uint32_t extra = n % m;
  std::uint32_t at = 0;
  for (std::uint32_t g = 0; g < m; ++g) {
    part.group_start[g] = at;
    at += base + ((g < extra) ? 1u : 0u);
    double power = 0.0;
    for (std::uint32_t j = part.group_start[g]; j < at; ++j) power += w.w[part.order[j]];
    part.group_power[g] = power;
  }
  part.group_start[m] = at;
  return part;
}

SelectionOutcome rec_select(const WeightVector& w, std::uint32_t m, PrngStream& stream) {
  const auto part = rec_partition(w, m);
  SelectionOutcome out;
  out.members.resize(m);
  std::vector<double> seat_power(m);
  for (std::uint32_t g = 0; g < m; ++g) {
    const double target = stream.unit() * part.group_power[g];
    double run = 0.0;
    std::uint32_t chosen = part.group_start[g + 1] - 1;  // guard against rounding overshoot
    for (std::uint32_t j = part.group_start[g]; j < part.group_start[g + 1]; ++j) {
      run += w.w[part.order[j]];
      if (target < run) {
        chosen = j;
        break;
      }
    }
    out.members[g] = part.order[chosen];
    seat_power[g] = part.group_power[g];
  }
  // sort members (and their seat powers) by participant index
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(),
            [&](std::uint32_t a, std::uint32_t b) { return out.members[a] < out.members[b]; });
  SelectionOutcome sorted;
  sorted.members.resize(m);
  sorted.raw_g.resize(m);
  for (std::uint32_t k = 0; k < m; ++k) {
    sorted.members[k] = out.members[perm[k]];
    sorted.raw_g[k] = seat_power[perm[k]];
  }
  normalize_outcome(sorted);
  return sorted;
}

double rec_lambda(const WeightVector& w, const RecPartition& part) {
  double lambda = std::numeric_limits<double>::infinity();
  for (std::uint32_t g = 0; g < part.groups(); ++g) {
    // order is weight-ascending, so the group's first entry is its lightest
    const double lightest = w.w[part.order[part.group_start[g]]];
    lambda = std::min(lambda, lightest / part.group_power[g]);
  }
  return lambda;
}

}  // namespace sortition
