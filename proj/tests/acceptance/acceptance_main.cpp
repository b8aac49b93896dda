// Release gate for the toolkit. Each criterion prints exactly one
// "criterion N: PASS|FAIL" line; run with a number 1..8 to check one of them,
// or with no arguments to run the whole gate. Exit code 0 iff everything
// requested passed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "sortition/crs.hpp"
#include "sortition/metrics.hpp"
#include "sortition/rec.hpp"
#include "sortition/stitch.hpp"
#include "sortition/sweeps.hpp"
#include "sortition/wrs.hpp"
#include "sortition/zipf.hpp"

namespace {

using namespace sortition;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      std::printf("  FAIL: %s\n", what.c_str());
    }
  }
  void budget(double elapsed, double limit) {
    std::printf("  elapsed %.2fs (budget %.0fs)\n", elapsed, limit);
    require(elapsed < limit, "runtime budget exceeded");
  }
};

// ---- random feasible instances ------------------------------------------

std::vector<double> random_simplex(PrngStream& g, std::uint32_t n) {
  std::vector<double> x(n);
  double total = 0.0;
  for (auto& v : x) {
    v = -std::log(1.0 - g.unit());
    total += v;
  }
  for (auto& v : x) v /= total;
  return x;
}

// Random weights pulled toward uniform until max w < 1/m strictly.
WeightVector random_stitch_instance(PrngStream& g, std::uint32_t n, std::uint32_t m) {
  auto x = random_simplex(g, n);
  const double cap = (1.0 / m) * (1.0 - 1e-9);
  while (*std::max_element(x.begin(), x.end()) >= cap)
    for (auto& v : x) v = 0.5 * v + 0.5 / n;
  return validate_weights(x);
}

// Draw acceptance weights on the simplex with every entry <= 1/m, then invert
// the affine stake map; the result always sits inside the feasibility window.
WeightVector random_crs_instance(PrngStream& g, std::uint32_t n, std::uint32_t m) {
  auto p = random_simplex(g, n);
  const double cap = (1.0 / m) * (1.0 - 1e-9);
  while (*std::max_element(p.begin(), p.end()) >= cap)
    for (auto& v : p) v = 0.5 * v + 0.5 / n;
  std::vector<double> w(n);
  for (std::uint32_t i = 0; i < n; ++i)
    w[i] = (p[i] * (n - m) + (m - 1)) / (static_cast<double>(m) * (n - 1));
  return validate_weights(w);
}

IntegerWeightVector random_integer_instance(PrngStream& g, std::uint32_t n,
                                            std::uint64_t max_unit) {
  std::vector<std::uint64_t> raw(n);
  for (auto& v : raw) v = 1 + g.bounded(max_unit);
  return validate_integer_weights(raw);
}

// Largest cutoff every participant can still reach: min over i of
// raw_i + the (m-1) heaviest other stakes. Recomputed here from scratch so
// instance generation does not lean on the code under test.
std::uint64_t strong_cutoff_cap(const IntegerWeightVector& iw, std::uint32_t m) {
  std::uint64_t cap = UINT64_MAX;
  for (std::size_t i = 0; i < iw.size(); ++i) {
    std::vector<std::uint64_t> others;
    for (std::size_t j = 0; j < iw.size(); ++j)
      if (j != i) others.push_back(iw.raw[j]);
    std::sort(others.begin(), others.end(), std::greater<>());
    std::uint64_t best = iw.raw[i];
    for (std::uint32_t k = 0; k + 1 < m && k < others.size(); ++k) best += others[k];
    cap = std::min(cap, best);
  }
  return cap;
}

double max_abs_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// ---- criterion 1: exact fairness on randomized small instances ----------

bool criterion1() {
  Gate gate;
  const auto start = Clock::now();
  PrngStream master(101);
  constexpr int kInstances = 200;

  double worst_stitch = 0.0, worst_crs = 0.0, worst_wrs = 0.0, worst_rec = 0.0;

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(t);
    const auto n = static_cast<std::uint32_t>(3 + g.bounded(10));  // 3..12
    const auto m = static_cast<std::uint32_t>(1 + g.bounded(n - 1));
    const auto w = random_stitch_instance(g, n, m);
    worst_stitch = std::max(worst_stitch,
                            max_abs_gap(oracle::stitch_law(w, m).expected_power, w.w));
    worst_stitch =
        std::max(worst_stitch, max_abs_gap(stitch_exact_expected_power(w, m), w.w));
  }
  gate.require(worst_stitch <= 1e-12,
               "stitch expected power drifted " + std::to_string(worst_stitch));

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(1000 + t);
    const auto n = static_cast<std::uint32_t>(7 + g.bounded(6));  // 7..12
    const std::uint32_t m = 3;
    const auto w = random_crs_instance(g, n, m);
    worst_crs = std::max(worst_crs, max_abs_gap(oracle::crs_law(w, m).expected_power, w.w));
  }
  gate.require(worst_crs <= 1e-9, "crs expected power drifted " + std::to_string(worst_crs));

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(2000 + t);
    const auto n = static_cast<std::uint32_t>(6 + g.bounded(7));  // 6..12
    const auto m = static_cast<std::uint32_t>(3 + g.bounded(2));  // 3..4
    const auto iw = random_integer_instance(g, n, 50);
    const std::uint64_t v = 1 + g.bounded(strong_cutoff_cap(iw, m));
    worst_wrs = std::max(
        worst_wrs, max_abs_gap(oracle::wrs_law(iw, m, v).expected_power, iw.normalized().w));
  }
  gate.require(worst_wrs <= 1e-9, "wrs expected power drifted " + std::to_string(worst_wrs));

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(3000 + t);
    const auto n = static_cast<std::uint32_t>(2 + g.bounded(11));  // 2..12
    const auto m = static_cast<std::uint32_t>(1 + g.bounded(n));
    const auto w = validate_weights(random_simplex(g, n));
    worst_rec = std::max(worst_rec, max_abs_gap(oracle::rec_law(w, m).expected_power, w.w));
  }
  gate.require(worst_rec <= 1e-12,
               "rec expected power drifted " + std::to_string(worst_rec));

  std::printf("  worst gaps: stitch %.2e, crs %.2e, wrs %.2e, rec %.2e\n", worst_stitch,
              worst_crs, worst_wrs, worst_rec);
  gate.budget(seconds_since(start), 60.0);
  return gate.ok;
}

// ---- criterion 2: counting DP vs exhaustive enumeration ------------------

bool criterion2() {
  Gate gate;
  const auto start = Clock::now();
  PrngStream master(202);
  int infeasible_hits = 0;

  for (int t = 0; t < 500 && gate.ok; ++t) {
    PrngStream g = master.substream(t);
    const auto n = static_cast<std::uint32_t>(2 + g.bounded(11));  // 2..12
    const auto m = static_cast<std::uint32_t>(1 + g.bounded(std::min<std::uint64_t>(4, n)));
    const auto iw = random_integer_instance(g, n, 50);
    const double alpha = std::max(g.unit(), 1e-6);
    const std::uint64_t v = wrs_threshold(alpha, iw.total);

    const auto reference = oracle::wrs_counts(iw, m, v);
    const bool reachable =
        std::all_of(reference.begin(), reference.end(), [](std::uint64_t c) { return c > 0; });

    const auto layer = wrs_count_table(iw, m, v);
    // The aggregate table must agree with the enumeration even when some
    // participant is unreachable: sum of per-participant counts = m * number
    // of qualifying subsets.
    std::uint64_t slot_total = 0;
    for (auto c : reference) slot_total += c;
    const U192 qualifying = binomial_u192(n, m) - layer.below(v);
    gate.require(U192(slot_total) == qualifying.mul_u64(m),
                 "qualifying-subset total mismatch at instance " + std::to_string(t));
    if (!reachable) {
      ++infeasible_hits;
      bool threw = false;
      try {
        wrs_counts_per_participant(iw, m, v, layer);
      } catch (const InfeasibleAlpha&) {
        threw = true;
      }
      gate.require(threw, "unreachable participant not rejected (instance " +
                              std::to_string(t) + ")");
      continue;
    }
    const auto counts = wrs_counts_per_participant(iw, m, v, layer);
    for (std::size_t i = 0; i < counts.size(); ++i)
      gate.require(counts[i] == U192(reference[i]),
                   "count mismatch at instance " + std::to_string(t) + ", participant " +
                       std::to_string(i));
  }

  std::printf("  500 instances checked, %d with unreachable participants\n", infeasible_hits);
  gate.budget(seconds_since(start), 30.0);
  return gate.ok;
}

// ---- criterion 3: honest-majority guarantee under adversarial coalitions -

std::vector<std::uint32_t> greedy_coalition(const WeightVector& w,
                                            const std::vector<std::uint32_t>& order,
                                            double tolerance) {
  std::vector<std::uint32_t> picked;
  double total = 0.0;
  for (auto i : order) {
    if (total + w.w[i] <= tolerance) {
      picked.push_back(i);
      total += w.w[i];
    }
  }
  return picked;
}

bool criterion3() {
  Gate gate;
  const auto start = Clock::now();
  PrngStream master(303);
  constexpr std::uint64_t kSamples = 10000;
  constexpr int kInstances = 20;
  std::uint64_t total_runs = 0;
  double sharpest = 0.0;  // largest adversarial power ever realized

  const auto check_all_coalitions = [&](const Selector& select,
                                        const DecentralizationReport& report,
                                        const WeightVector& w, PrngStream& g,
                                        const std::string& tag) {
    std::vector<std::uint32_t> heavy(w.size());
    std::iota(heavy.begin(), heavy.end(), 0);
    std::sort(heavy.begin(), heavy.end(), [&](std::uint32_t a, std::uint32_t b) {
      return w.w[a] != w.w[b] ? w.w[a] > w.w[b] : a < b;
    });
    auto light = heavy;
    std::reverse(light.begin(), light.end());
    auto shuffled = heavy;
    shuffle(g, shuffled);

    for (const auto& order : {heavy, light, shuffled}) {
      const auto coalition = greedy_coalition(w, order, report.adversary_tolerance);
      const auto verdict =
          honest_majority_check(select, report, w, coalition, kSamples, g.substream(77));
      gate.require(verdict.violations == 0,
                   tag + ": " + std::to_string(verdict.violations) +
                       " committees handed the coalition a majority");
      sharpest = std::max(sharpest, verdict.max_adversarial_power);
      ++total_runs;
    }
  };

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(t);
    const auto n = static_cast<std::uint32_t>(8 + g.bounded(9));  // 8..16
    const auto m = static_cast<std::uint32_t>(2 + g.bounded(4));  // 2..5
    const auto w = random_stitch_instance(g, n, m);
    const auto report = lambda_for(Algorithm::stitch, w, AnalyzeParams{m, std::nullopt});
    check_all_coalitions(
        [&](PrngStream& s) { return stitch_select(w, StitchConfig{m, false}, s); }, report, w,
        g, "stitch instance " + std::to_string(t));
  }

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(100 + t);
    const auto n = static_cast<std::uint32_t>(8 + g.bounded(9));
    const std::uint32_t m = 3;
    const auto w = random_crs_instance(g, n, m);
    const auto report = lambda_for(Algorithm::crs, w, AnalyzeParams{m, std::nullopt});
    check_all_coalitions([&](PrngStream& s) { return crs_select(w, m, s); }, report, w, g,
                         "crs instance " + std::to_string(t));
  }

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(200 + t);
    const auto n = static_cast<std::uint32_t>(8 + g.bounded(9));
    const auto m = static_cast<std::uint32_t>(1 + g.bounded(n));
    const auto w = validate_weights(random_simplex(g, n));
    const auto report = lambda_for(Algorithm::rec, w, AnalyzeParams{m, std::nullopt});
    check_all_coalitions([&](PrngStream& s) { return rec_select(w, m, s); }, report, w, g,
                         "rec instance " + std::to_string(t));
  }

  for (int t = 0; t < kInstances; ++t) {
    PrngStream g = master.substream(300 + t);
    // redraw until the acceptance rate keeps rejection sampling cheap
    for (int attempt = 0;; ++attempt) {
      gate.require(attempt < 200, "could not find a tractable instance");
      if (attempt >= 200) return gate.ok;
      const auto n = static_cast<std::uint32_t>(8 + g.bounded(7));  // 8..14
      const auto m = static_cast<std::uint32_t>(3 + g.bounded(2));  // 3..4
      const auto iw = random_integer_instance(g, n, 30);
      const std::uint64_t v = 1 + g.bounded(strong_cutoff_cap(iw, m));
      const double alpha = static_cast<double>(v) / static_cast<double>(iw.total);
      if (alpha <= 0.0 || alpha >= 1.0) continue;
      const auto cfg = make_wrs_config(m, alpha, iw);
      const auto ww = wrs_weights(iw, cfg);
      double qualifying_mass = 0.0;
      for (std::size_t i = 0; i < ww.p.size(); ++i)
        qualifying_mass += ww.p[i] * ww.c[i].to_double();
      const double accept_rate =
          qualifying_mass / (binomial_u192(n, m).to_double() * ww.acceptance_scale);
      if (accept_rate < 0.02) continue;

      const auto w = iw.normalized();
      const auto report = lambda_for(Algorithm::wrs, iw, AnalyzeParams{m, alpha});
      check_all_coalitions(
          [&](PrngStream& s) { return wrs_select(iw, cfg, ww, s); }, report, w, g,
          "wrs instance " + std::to_string(t));
      break;
    }
  }

  std::printf("  %llu coalition checks, max adversarial power seen %.4f\n",
              static_cast<unsigned long long>(total_runs), sharpest);
  gate.budget(seconds_since(start), 600.0);
  return gate.ok;
}

// ---- criterion 4: the decentralization bound holds on every realization --

bool criterion4() {
  Gate gate;
  const auto start = Clock::now();
  constexpr std::uint64_t kTrials = 10000;

  struct Config {
    std::string tag;
    Selector select;
    WeightVector w;
    std::uint32_t m;
    double lambda;
    bool must_attain;
  };
  std::vector<Config> configs;

  // small instances, where the worst case is reachable within the trial count
  {
    const auto w = validate_weights({0.10, 0.15, 0.20, 0.25, 0.30});
    const std::uint32_t m = 3;
    const auto report = lambda_for(Algorithm::stitch, w, AnalyzeParams{m, std::nullopt});
    configs.push_back({"stitch small",
                       [=](PrngStream& s) { return stitch_select(w, {m, false}, s); }, w, m,
                       report.lambda, true});
  }
  {
    const auto w = validate_weights({0.10, 0.11, 0.12, 0.13, 0.13, 0.13, 0.14, 0.14});
    const std::uint32_t m = 3;
    const auto report = lambda_for(Algorithm::crs, w, AnalyzeParams{m, std::nullopt});
    configs.push_back({"crs small", [=](PrngStream& s) { return crs_select(w, m, s); }, w, m,
                       report.lambda, true});
  }
  {
    const auto w = validate_weights({0.10, 0.12, 0.14, 0.18, 0.21, 0.25});
    const std::uint32_t m = 2;
    const auto report = lambda_for(Algorithm::rec, w, AnalyzeParams{m, std::nullopt});
    configs.push_back({"rec small", [=](PrngStream& s) { return rec_select(w, m, s); }, w, m,
                       report.lambda, true});
  }
  {
    const auto iw = validate_integer_weights({1, 1, 2, 4});
    const std::uint32_t m = 3;
    const double alpha = 0.5;
    const auto cfg = make_wrs_config(m, alpha, iw);
    const auto ww = wrs_weights(iw, cfg);
    const auto report = lambda_for(Algorithm::wrs, iw, AnalyzeParams{m, alpha});
    configs.push_back({"wrs small",
                       [=](PrngStream& s) { return wrs_select(iw, cfg, ww, s); },
                       iw.normalized(), m, report.lambda, false});
  }

  // full-scale profiles
  {
    const auto w = zipf_weights(1000, 0.5);
    const std::uint32_t m = 20;
    const auto report = lambda_for(Algorithm::stitch, w, AnalyzeParams{m, std::nullopt});
    configs.push_back({"stitch n=1000",
                       [=](PrngStream& s) { return stitch_select(w, {m, false}, s); }, w, m,
                       report.lambda, false});
  }
  {
    const auto w = zipf_weights(1000, 0.0);
    const std::uint32_t m = 20;
    const auto report = lambda_for(Algorithm::crs, w, AnalyzeParams{m, std::nullopt});
    configs.push_back({"crs n=1000", [=](PrngStream& s) { return crs_select(w, m, s); }, w, m,
                       report.lambda, false});
  }
  {
    const auto w = zipf_weights(1000, 1.0);
    const std::uint32_t m = 20;
    const auto report = lambda_for(Algorithm::rec, w, AnalyzeParams{m, std::nullopt});
    configs.push_back({"rec n=1000", [=](PrngStream& s) { return rec_select(w, m, s); }, w, m,
                       report.lambda, false});
  }
  {
    const auto iw = zipf_integer_weights(1000, 0.5);
    const std::uint32_t m = 20;
    const double alpha = 0.02;
    const auto cfg = make_wrs_config(m, alpha, iw);
    const auto ww = wrs_weights(iw, cfg);
    const auto report = lambda_for(Algorithm::wrs, iw, AnalyzeParams{m, alpha});
    configs.push_back({"wrs n=1000",
                       [=](PrngStream& s) { return wrs_select(iw, cfg, ww, s); },
                       iw.normalized(), m, report.lambda, false});
  }

  PrngStream master(404);
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const auto& cfg = configs[c];
    const double ceiling = 1.0 / cfg.lambda;
    double realized = 0.0;
    PrngStream lane = master.substream(c);
    for (std::uint64_t t = 0; t < kTrials; ++t) {
      PrngStream s = lane.substream(t);
      const auto outcome = cfg.select(s);
      outcome.check(cfg.w.size(), cfg.m);
      for (std::size_t k = 0; k < outcome.members.size(); ++k)
        realized = std::max(realized, outcome.voting_power[k] / cfg.w.w[outcome.members[k]]);
    }
    gate.require(realized <= ceiling * (1.0 + 1e-9),
                 cfg.tag + ": realized power ratio " + std::to_string(realized) +
                     " above the ceiling " + std::to_string(ceiling));
    if (cfg.must_attain)
      gate.require(realized >= ceiling * (1.0 - 1e-9),
                   cfg.tag + ": ceiling " + std::to_string(ceiling) + " never attained (max " +
                       std::to_string(realized) + ")");
    std::printf("  %-13s lambda %.6f, worst ratio %.6f of ceiling %.6f\n", cfg.tag.c_str(),
                cfg.lambda, realized, ceiling);
  }

  gate.budget(seconds_since(start), 600.0);
  return gate.ok;
}

// ---- criterion 5: feasibility envelope at n=1000 --------------------------

bool criterion5() {
  Gate gate;
  const auto start = Clock::now();
  const auto rows = sweep_m_max(1000, default_s_grid());
  gate.require(rows.size() == 21, "expected 21 grid rows");

  for (const auto& row : rows) {
    if (row.s <= 0.7 + 1e-9)
      gate.require(row.stitch_m_max >= 20, "stitch m_max " + std::to_string(row.stitch_m_max) +
                                               " < 20 at s=" + std::to_string(row.s));
    if (row.s < 0.05)
      gate.require(row.crs_m_max >= 20,
                   "crs m_max < 20 on the uniform profile");
    else
      gate.require(row.crs_m_max < 20, "crs m_max " + std::to_string(row.crs_m_max) +
                                           " >= 20 at s=" + std::to_string(row.s));
    if (row.s >= 0.6 - 1e-9)
      gate.require(row.crs_m_max == 1, "crs m_max " + std::to_string(row.crs_m_max) +
                                           " != 1 at s=" + std::to_string(row.s));
  }

  std::printf("  stitch m_max at s=0.7: %u, crs m_max at s=0: %u\n", rows[7].stitch_m_max,
              rows[0].crs_m_max);
  gate.budget(seconds_since(start), 10.0);
  return gate.ok;
}

// ---- criterion 6: statistical fairness at full scale ----------------------

bool criterion6() {
  Gate gate;
  const auto start = Clock::now();
  constexpr std::uint64_t kTrials = 200000;
  const std::uint32_t n = 1000, m = 20;
  const double s = 0.5;

  const auto w = zipf_weights(n, s);
  const auto stitch = empirical_fairness(Algorithm::stitch, w, nullptr,
                                         AnalyzeParams{m, std::nullopt}, kTrials,
                                         PrngStream(606));
  gate.require(stitch.max_sigma_deviation <= 5.0,
               "stitch deviates " + std::to_string(stitch.max_sigma_deviation) + " sigma");

  const auto rec = empirical_fairness(Algorithm::rec, w, nullptr,
                                      AnalyzeParams{m, std::nullopt}, kTrials,
                                      PrngStream(607));
  gate.require(rec.max_sigma_deviation <= 5.0,
               "rec deviates " + std::to_string(rec.max_sigma_deviation) + " sigma");

  const auto iw = zipf_integer_weights(n, s);
  const double alpha = 0.02;  // cutoff near the typical committee stake
  const auto wrs = empirical_fairness(Algorithm::wrs, iw.normalized(), &iw,
                                      AnalyzeParams{m, alpha}, kTrials, PrngStream(608));
  gate.require(wrs.max_sigma_deviation <= 5.0,
               "wrs deviates " + std::to_string(wrs.max_sigma_deviation) + " sigma");

  std::printf("  max sigma: stitch %.3f, rec %.3f, wrs %.3f\n", stitch.max_sigma_deviation,
              rec.max_sigma_deviation, wrs.max_sigma_deviation);
  gate.budget(seconds_since(start), 300.0);
  return gate.ok;
}

// ---- criterion 7: acceptance-weight computation speed at full scale -------

bool criterion7() {
  Gate gate;
  const auto overall = Clock::now();
  const std::uint32_t n = 1000, m = 20;
  const double alpha = 0.1;

  for (const double s : {0.5, 1.0, 1.5}) {
    const auto iw = zipf_integer_weights(n, s);
    const auto cfg = make_wrs_config(m, alpha, iw);

    const auto start = Clock::now();
    const auto layer = wrs_count_table(iw, m, cfg.v);
    const auto ww = wrs_weights_from_layer(iw, cfg, layer);
    const double elapsed = seconds_since(start);

    double p_total = 0.0;
    for (double p : ww.p) {
      gate.require(p > 0.0, "non-positive acceptance weight");
      p_total += p;
    }
    gate.require(std::abs(p_total - 1.0) <= 1e-12, "acceptance weights do not sum to 1");
    gate.require(ww.acceptance_scale <= 1.0 + 1e-12, "acceptance scale above 1");

    // Every committee slot is counted exactly once across participants; any
    // overflow or bookkeeping slip in the exact counts breaks this identity.
    U192 slots;
    for (const auto& c : ww.c) slots += c;
    const U192 qualifying = binomial_u192(n, m) - layer.below(cfg.v);
    gate.require(slots == qualifying.mul_u64(m), "slot-count identity violated");

    std::printf("  s=%.1f: cutoff %llu, %.2fs\n", s,
                static_cast<unsigned long long>(cfg.v), elapsed);
    gate.require(elapsed <= 10.0, "acceptance-weight computation over budget");
  }

  gate.budget(seconds_since(overall), 60.0);
  return gate.ok;
}

// ---- criterion 8: the cutoff sweep peaks above the smallest alpha ---------

bool criterion8() {
  Gate gate;
  const auto start = Clock::now();
  const auto grid = default_alpha_grid();
  bool peak_above_min = false;

  for (const double s : {0.5, 1.0, 1.5}) {
    const auto rows = sweep_lambda_vs_alpha(1000, 20, s, grid);
    gate.require(rows.size() == grid.size(), "row count mismatch");
    double best = 0.0;
    std::string maxima;
    for (const auto& row : rows) {
      if (!row.feasible) continue;
      best = std::max(best, row.lambda);
      if (row.is_argmax) {
        maxima += (maxima.empty() ? "" : ", ") + std::to_string(row.alpha);
        if (row.alpha > grid.front() + 1e-12) peak_above_min = true;
      }
    }
    std::printf("  s=%.1f: best lambda %.6g, maxima at alpha {%s}\n", s, best,
                maxima.c_str());
  }

  gate.require(peak_above_min,
               "no profile attains its best decentralization above the smallest alpha");
  gate.budget(seconds_since(start), 900.0);
  return gate.ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1) {
    const int c = std::atoi(argv[1]);
    if (c < 1 || c > 8) {
      std::fprintf(stderr, "usage: %s [criterion 1..8]\n", argv[0]);
      return 1;
    }
    which.push_back(c);
  } else {
    for (int c = 1; c <= 8; ++c) which.push_back(c);
  }

  bool (*const runners[8])() = {criterion1, criterion2, criterion3, criterion4,
                                criterion5, criterion6, criterion7, criterion8};
  bool all_ok = true;
  for (int c : which) {
    bool ok = false;
    try {
      ok = runners[c - 1]();
    } catch (const std::exception& e) {
      std::printf("  FAIL: unexpected exception: %s\n", e.what());
    }
    std::printf("criterion %d: %s\n", c, ok ? "PASS" : "FAIL");
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
