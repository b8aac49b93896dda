#include "sortition/stitch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sortition {

void stitch_require_feasible(const WeightVector& w, std::uint32_t m) {
  if (m == 0) throw SortitionError("committee size must be at least 1");
  if (m > w.size()) throw SizeExceedsPopulation(m, w.size());
  const double cap = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!(w.w[i] < cap)) throw WeightTooLarge(i, w.w[i], m);
}

std::vector<double> stitch_boundaries(const WeightVector& w,
                                      const std::vector<std::uint32_t>& order) {
  std::vector<double> b(order.size() + 1);
  b[0] = 0.0;
  double run = 0.0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    run += w.w[order[j]];
    b[j + 1] = run;
  }
  b.back() = 1.0;  // absorb cumulative rounding at the top end
  return b;
}

std::uint32_t stitch_locate(const std::vector<double>& boundaries, double x) {
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), x);
  return static_cast<std::uint32_t>(it - boundaries.begin()) - 1;
}

std::vector<std::uint32_t> stitch_committee_at(const std::vector<double>& boundaries,
                                               std::uint32_t m, double x) {
  std::vector<std::uint32_t> hits;
  hits.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    double pt = x + static_cast<double>(i) / static_cast<double>(m);
    if (pt >= 1.0) pt -= 1.0;
    hits.push_back(stitch_locate(boundaries, pt));
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

SelectionOutcome stitch_select(const WeightVector& w, const StitchConfig& cfg,
                               PrngStream& stream) {
  stitch_require_feasible(w, cfg.m);
  const auto n = static_cast<std::uint32_t>(w.size());
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  if (cfg.permute_first) shuffle(stream, order);
  const auto boundaries = stitch_boundaries(w, order);
  const double x = stream.unit();
  const auto positions = stitch_committee_at(boundaries, cfg.m, x);

  SelectionOutcome out;
  out.members.reserve(cfg.m);
  for (auto pos : positions) out.members.push_back(order[pos]);
  std::sort(out.members.begin(), out.members.end());
  if (std::adjacent_find(out.members.begin(), out.members.end()) != out.members.end())
    throw SortitionError("duplicate member despite weight cap");
  out.raw_g.assign(cfg.m, 1.0);
  normalize_outcome(out);
  return out;
}

std::vector<double> stitch_exact_expected_power(const WeightVector& w, std::uint32_t m) {
  stitch_require_feasible(w, m);
  const auto n = static_cast<std::uint32_t>(w.size());
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  const auto boundaries = stitch_boundaries(w, order);

  // Work in the scaled coordinate y = x*M on [0,1): the committee depends on
  // x only through x mod 1/M, and every boundary lands at b*M mod 1.
  std::vector<double> cuts;
  cuts.reserve(boundaries.size() + 2);
  cuts.push_back(0.0);
  cuts.push_back(1.0);
  const double dm = static_cast<double>(m);
  for (double b : boundaries) {
    const double scaled = b * dm;
    const double frac = scaled - std::floor(scaled);
    cuts.push_back(frac);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> expected(n, 0.0);
  for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
    const double len = cuts[t + 1] - cuts[t];
    if (len <= 0.0) continue;
    const double y_mid = cuts[t] + len / 2.0;
    const auto committee = stitch_committee_at(boundaries, m, y_mid / dm);
    for (auto pos : committee) expected[pos] += len / dm;
  }
  return expected;
}

}  // namespace sortition
