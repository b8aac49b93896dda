#include "sortition/sweeps.hpp"

#include <algorithm>
#include <cmath>

#include "sortition/parallel.hpp"
#include "sortition/zipf.hpp"

namespace sortition {

std::vector<double> default_s_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(static_cast<double>(i) / 10.0);
  return grid;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(static_cast<double>(i) * 0.05);
  return grid;
}

std::vector<MmaxRow> sweep_m_max(std::uint32_t n, const std::vector<double>& s_grid) {
  std::vector<MmaxRow> rows(s_grid.size());
  parallel_for_chunks(s_grid.size(), [&](std::uint64_t idx) {
    const double s = s_grid[idx];
    const auto w = zipf_weights(n, s);
    rows[idx] = {s, m_max(Algorithm::stitch, w), m_max(Algorithm::crs, w)};
  });
  return rows;
}

namespace {

// Best wrs bound over the alpha grid for one stake profile; one count table
// sized for the largest feasible cutoff serves every alpha.
struct WrsGridResult {
  bool any_feasible = false;
  double best_lambda = 0.0;
  double best_alpha = 0.0;
  std::vector<LambdaAlphaRow> rows;
};

WrsGridResult wrs_over_alpha_grid(const IntegerWeightVector& iw, std::uint32_t m, double s,
                                  const std::vector<double>& alpha_grid) {
  WrsGridResult result;
  result.rows.reserve(alpha_grid.size());

  if (m <= 2 || iw.size() <= m) {  // rejection calibration needs N > M > 2
    for (const double alpha : alpha_grid) {
      LambdaAlphaRow row;
      row.s = s;
      row.alpha = alpha;
      result.rows.push_back(row);
    }
    return result;
  }

  std::uint64_t v_max = 0;
  std::vector<std::uint64_t> cutoffs(alpha_grid.size());
  for (std::size_t k = 0; k < alpha_grid.size(); ++k) {
    cutoffs[k] = wrs_threshold(alpha_grid[k], iw.total);
    if (wrs_strong_feasibility(iw, m, cutoffs[k]).feasible)
      v_max = std::max(v_max, cutoffs[k]);
  }

  SubsetCountLayer layer;
  if (v_max > 0) layer = wrs_count_table(iw, m, v_max);
  const auto w = iw.normalized();

  for (std::size_t k = 0; k < alpha_grid.size(); ++k) {
    LambdaAlphaRow row;
    row.s = s;
    row.alpha = alpha_grid[k];
    if (v_max == 0 || cutoffs[k] > v_max ||
        !wrs_strong_feasibility(iw, m, cutoffs[k]).feasible) {
      result.rows.push_back(row);
      continue;
    }
    WrsConfig cfg{m, alpha_grid[k], cutoffs[k]};
    const auto ww = wrs_weights_from_layer(iw, cfg, layer);
    row.feasible = true;
    row.lambda = wrs_lambda_bound(w, ww, m);
    if (!result.any_feasible || row.lambda > result.best_lambda) {
      result.any_feasible = true;
      result.best_lambda = row.lambda;
      result.best_alpha = row.alpha;
    }
    result.rows.push_back(row);
  }

  // flag every feasible row tied with the maximum (relative 1e-12)
  if (result.any_feasible) {
    const double cut = result.best_lambda * (1.0 - 1e-12);
    for (auto& row : result.rows) row.is_argmax = row.feasible && row.lambda >= cut;
  }
  return result;
}

}  // namespace

std::vector<LambdaSRow> sweep_lambda_vs_s(std::uint32_t n, std::uint32_t m,
                                          const std::vector<double>& s_grid,
                                          const std::vector<double>& alpha_grid) {
  std::vector<std::vector<LambdaSRow>> per_s(s_grid.size());
  parallel_for_chunks(s_grid.size(), [&](std::uint64_t idx) {
    const double s = s_grid[idx];
    const auto w = zipf_weights(n, s);
    std::vector<LambdaSRow> rows;

    for (const Algorithm alg : {Algorithm::stitch, Algorithm::crs, Algorithm::rec}) {
      LambdaSRow row;
      row.s = s;
      row.algorithm = alg;
      try {
        const auto report = lambda_for(alg, w, AnalyzeParams{m, std::nullopt});
        row.feasible = true;
        row.lambda = report.lambda;
        row.kind = report.lambda_kind;
      } catch (const FeasibilityError&) {
        row.feasible = false;
      }
      rows.push_back(row);
    }

    LambdaSRow wrs_row;
    wrs_row.s = s;
    wrs_row.algorithm = Algorithm::wrs;
    wrs_row.kind = LambdaKind::lower_bound;
    const auto iw = zipf_integer_weights(n, s);
    const auto grid = wrs_over_alpha_grid(iw, m, s, alpha_grid);
    if (grid.any_feasible) {
      wrs_row.feasible = true;
      wrs_row.lambda = grid.best_lambda;
      wrs_row.alpha = grid.best_alpha;
    }
    rows.push_back(wrs_row);
    per_s[idx] = std::move(rows);
  });

  std::vector<LambdaSRow> out;
  out.reserve(4 * s_grid.size());
  for (auto& rows : per_s)
    for (auto& row : rows) out.push_back(row);
  return out;
}

std::vector<LambdaAlphaRow> sweep_lambda_vs_alpha(std::uint32_t n, std::uint32_t m, double s,
                                                  const std::vector<double>& alpha_grid) {
  const auto iw = zipf_integer_weights(n, s);
  return wrs_over_alpha_grid(iw, m, s, alpha_grid).rows;
}

}  // namespace sortition
