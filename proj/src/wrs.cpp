#include "sortition/wrs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace sortition {

std::uint64_t wrs_threshold(double alpha, std::uint64_t total_weight) {
  const double x = alpha * static_cast<double>(total_weight);
  const double r = std::nearbyint(x);
  double v;
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)))
    v = r;
  else
    v = std::ceil(x);
  if (v < 1.0) return 1;
  return static_cast<std::uint64_t>(v);
}

WrsConfig make_wrs_config(std::uint32_t m, double alpha, const IntegerWeightVector& iw) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw FeasibilityError("alpha must lie strictly between 0 and 1");
  const auto n = iw.size();
  if (!(n > m)) throw SizeExceedsPopulation(m, n);
  if (m <= 2) throw FeasibilityError("committee size must be at least 3");
  return WrsConfig{m, alpha, wrs_threshold(alpha, iw.total)};
}

U192 SubsetCountLayer::below(std::uint64_t v) const {
  U192 total;
  const auto& top = rows[m];
  const std::uint64_t stop = std::min(v, v_cap);
  for (std::uint64_t x = 0; x < stop; ++x) total += top[x];
  return total;
}

SubsetCountLayer wrs_count_table(const IntegerWeightVector& iw, std::uint32_t m,
                                 std::uint64_t v_cap) {
  if (v_cap == 0) throw SortitionError("count table needs v_cap >= 1");
  const auto n = iw.size();
  if (m > n) throw SizeExceedsPopulation(m, n);
  // Overflow guard: every count and alternating-sum magnitude stays below
  // binom(n, k*) * (m+1), so one checked multiply proves the whole run exact.
  binomial_u192(n, std::min<std::uint64_t>(m, n / 2)).mul_u64(m + 1);

  SubsetCountLayer layer;
  layer.m = m;
  layer.v_cap = v_cap;
  layer.rows.assign(m + 1, std::vector<U192>(v_cap));
  layer.rows[0][0] = U192(1);

  // Items are folded in ascending weight so the attainable-sum frontier grows
  // slowly; the final layer does not depend on the order.
  std::vector<std::uint64_t> sorted = iw.raw;
  std::sort(sorted.begin(), sorted.end());

  // frontier[k] = largest attainable sum of k items folded so far, capped
  std::vector<std::uint64_t> frontier(m + 1, 0);

  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::uint64_t wi = sorted[idx];
    if (wi >= v_cap) break;  // this and all heavier items only reach sums >= v_cap
    const auto k_top = static_cast<std::uint32_t>(std::min<std::size_t>(idx + 1, m));
    for (std::uint32_t k = k_top; k >= 1; --k) {
      const std::uint64_t hi = std::min(v_cap - 1, frontier[k - 1] + wi);
      auto& dst = layer.rows[k];
      const auto& src = layer.rows[k - 1];
      for (std::uint64_t v = hi + 1; v-- > wi;) dst[v] += src[v - wi];
    }
    for (std::uint32_t k = k_top; k >= 1; --k)
      frontier[k] = std::min(v_cap - 1, std::max(frontier[k], frontier[k - 1] + wi));
  }
  return layer;
}

WrsCapacity wrs_strong_feasibility(const IntegerWeightVector& iw, std::uint32_t m,
                                   std::uint64_t v) {
  const auto n = iw.size();
  WrsCapacity out;
  if (m == 0 || m > n) throw SizeExceedsPopulation(m, n);

  // Capacity of participant i is raw_i plus the M-1 heaviest other raws; the
  // minimum over i is always attained by the globally lightest participant.
  // (If the lightest sits inside the top M-1, everything there is tied, and
  // swapping it for the next weight changes nothing.)
  std::vector<std::uint64_t> sorted = iw.raw;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::uint64_t top_m1 = 0;
  for (std::uint32_t k = 0; k + 1 < m; ++k) top_m1 += sorted[k];

  std::size_t lightest = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (iw.raw[i] < iw.raw[lightest]) lightest = i;

  out.best_attainable = iw.raw[lightest] + top_m1;
  out.worst_index = lightest;
  out.feasible = out.best_attainable >= v;
  return out;
}

std::vector<U192> wrs_counts_per_participant(const IntegerWeightVector& iw, std::uint32_t m,
                                             std::uint64_t v, const SubsetCountLayer& layer) {
  const auto n = iw.size();
  if (layer.m != m || v > layer.v_cap)
    throw SortitionError("count layer does not cover the requested cutoff");
  const auto capacity = wrs_strong_feasibility(iw, m, v);
  if (!capacity.feasible) {
    const double alpha = static_cast<double>(v) / static_cast<double>(iw.total);
    throw InfeasibleAlpha(capacity.worst_index, alpha, v, capacity.best_attainable);
  }

  const U192 c_below = layer.below(v);  // m-subsets under the cutoff
  const U192 c_choose = binomial_u192(n - 1, m - 1);

  // For each participant, the alternating identity needs prefix sums of rows
  // m, m-1, ..., 0 at cutpoints v - t*w_i - 1. Queries are answered per row in
  // one ascending sweep, so no prefix table is materialized.
  struct Query {
    std::uint64_t cut;  // prefix sum over [0, cut]
    std::uint32_t participant;
    bool negate;
  };
  std::vector<std::vector<Query>> by_row(m + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t wi = iw.raw[i];
    for (std::uint32_t t = 0; t <= m; ++t) {
      const unsigned __int128 spent = static_cast<unsigned __int128>(t) * wi;
      if (spent >= v) break;  // empty inner sum from here on
      const auto cut = static_cast<std::uint64_t>(v - spent - 1);
      by_row[m - t].push_back({cut, i, (t % 2) == 1});
    }
  }

  std::vector<U192> miss(n);  // subsets avoiding i with sum < v, via wrapping alternation
  for (std::uint32_t row = 0; row <= m; ++row) {
    auto& queries = by_row[row];
    if (queries.empty()) continue;
    std::sort(queries.begin(), queries.end(),
              [](const Query& a, const Query& b) { return a.cut < b.cut; });
    U192 running;
    std::uint64_t next_v = 0;
    for (const auto& q : queries) {
      while (next_v <= q.cut) {
        running += layer.rows[row][next_v];
        ++next_v;
      }
      if (q.negate)
        miss[q.participant] -= running;
      else
        miss[q.participant] += running;
    }
  }

  std::vector<U192> counts(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (c_below < miss[i])
      throw SortitionError("count extraction out of range (internal)");
    const U192 below_with_i = c_below - miss[i];  // m-subsets containing i, sum < v
    if (c_choose < below_with_i)
      throw SortitionError("count extraction out of range (internal)");
    counts[i] = c_choose - below_with_i;
    if (counts[i].is_zero()) {
      const double alpha = static_cast<double>(v) / static_cast<double>(iw.total);
      throw InfeasibleAlpha(i, alpha, v, 0);
    }
  }
  return counts;
}

namespace {

double acceptance_scale_of(const std::vector<double>& p, std::uint32_t m) {
  std::vector<double> sorted = p;
  std::nth_element(sorted.begin(), sorted.end() - m, sorted.end());
  std::sort(sorted.end() - m, sorted.end());
  double scale = 0.0;
  for (auto it = sorted.end() - m; it != sorted.end(); ++it) scale += *it;
  return scale;
}

WrsWeights weights_from_counts(const IntegerWeightVector& iw, std::uint32_t m,
                               std::vector<U192> counts) {
  WrsWeights out;
  out.c = std::move(counts);
  const auto n = iw.size();
  std::vector<double> t(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<double>(iw.raw[i]) / out.c[i].to_double();
    total += t[i];
  }
  out.p.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.p[i] = t[i] / total;
  out.acceptance_scale = acceptance_scale_of(out.p, m);
  return out;
}

}  // namespace

WrsWeights wrs_weights(const IntegerWeightVector& iw, const WrsConfig& cfg) {
  const auto capacity = wrs_strong_feasibility(iw, cfg.m, cfg.v);
  if (!capacity.feasible)
    throw InfeasibleAlpha(capacity.worst_index, cfg.alpha, cfg.v, capacity.best_attainable);
  const auto layer = wrs_count_table(iw, cfg.m, cfg.v);
  return weights_from_counts(iw, cfg.m,
                             wrs_counts_per_participant(iw, cfg.m, cfg.v, layer));
}

WrsWeights wrs_weights_from_layer(const IntegerWeightVector& iw, const WrsConfig& cfg,
                                  const SubsetCountLayer& layer) {
  return weights_from_counts(iw, cfg.m,
                             wrs_counts_per_participant(iw, cfg.m, cfg.v, layer));
}

SelectionOutcome wrs_select(const IntegerWeightVector& iw, const WrsConfig& cfg,
                            const WrsWeights& ww, PrngStream& stream,
                            std::uint64_t max_rounds) {
  if (max_rounds == 0) throw SortitionError("max_rounds must be at least 1");
  const auto n = static_cast<std::uint32_t>(iw.size());
  for (std::uint64_t round = 1; round <= max_rounds; ++round) {
    const auto subset = sample_uniform_subset(stream, n, cfg.m);
    std::uint64_t sum = 0;
    for (auto j : subset) sum += iw.raw[j];
    if (sum < cfg.v) continue;  // cutoff miss: rejected before the uniform draw
    const double u = stream.unit() * ww.acceptance_scale;
    double total = 0.0;
    for (auto j : subset) total += ww.p[j];
    if (u < total) {
      SelectionOutcome out;
      out.members = subset;
      out.raw_g.resize(cfg.m);
      for (std::size_t k = 0; k < subset.size(); ++k) out.raw_g[k] = ww.p[subset[k]];
      normalize_outcome(out);
      out.rounds_used = round;
      return out;
    }
  }
  throw RejectionBudgetExhausted(max_rounds);
}

double wrs_lambda_bound(const WeightVector& w, const WrsWeights& ww, std::uint32_t m) {
  const auto n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ww.p[a] != ww.p[b]) return ww.p[a] < ww.p[b];
    return a < b;
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

  // prefix[k] = sum of the k smallest acceptance weights
  std::vector<double> prefix(std::min<std::size_t>(n, m) + 1, 0.0);
  for (std::size_t k = 0; k < prefix.size() - 1; ++k)
    prefix[k + 1] = prefix[k] + ww.p[order[k]];

  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    // smallest M-1 acceptance weights excluding i
    double f;
    if (m == 1)
      f = 0.0;
    else if (rank[i] <= m - 2)
      f = prefix[m] - ww.p[i];
    else
      f = prefix[m - 1];
    bound = std::min(bound, w.w[i] * (1.0 + f / ww.p[i]));
  }
  return bound;
}

}  // namespace sortition
