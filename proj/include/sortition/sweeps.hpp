#pragma once

#include <cstdint>
#include <vector>

#include "sortition/metrics.hpp"

namespace sortition {

// Default experiment grids: s in {0.0, 0.1, ..., 2.0}, alpha in
// {0.05, 0.10, ..., 0.95}.
std::vector<double> default_s_grid();
std::vector<double> default_alpha_grid();

struct MmaxRow {
  double s = 0.0;
  std::uint32_t stitch_m_max = 0;
  std::uint32_t crs_m_max = 0;
};

// Feasibility envelope per exponent (continuous stake profile).
std::vector<MmaxRow> sweep_m_max(std::uint32_t n, const std::vector<double>& s_grid);

struct LambdaSRow {
  double s = 0.0;
  Algorithm algorithm = Algorithm::stitch;
  bool feasible = false;
  double lambda = 0.0;          // meaningful only when feasible
  LambdaKind kind = LambdaKind::exact;
  double alpha = 0.0;           // wrs rows: best alpha; 0 otherwise
};

// Decentralization per exponent for all four algorithms; wrs reports the
// best bound over alpha_grid (integer stake profile, one count table reused
// across the grid). Infeasible grid points become flagged rows.
std::vector<LambdaSRow> sweep_lambda_vs_s(std::uint32_t n, std::uint32_t m,
                                          const std::vector<double>& s_grid,
                                          const std::vector<double>& alpha_grid);

struct LambdaAlphaRow {
  double s = 0.0;
  double alpha = 0.0;
  bool feasible = false;
  double lambda = 0.0;
  bool is_argmax = false;  // flags every feasible row tied with the maximum
};

// Decentralization floor across the alpha grid at a fixed exponent.
std::vector<LambdaAlphaRow> sweep_lambda_vs_alpha(std::uint32_t n, std::uint32_t m, double s,
                                                  const std::vector<double>& alpha_grid);

}  // namespace sortition
