#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sortition/errors.hpp"
#include "sortition/weights.hpp"

namespace sortition {

inline constexpr std::uint64_t kDefaultMaxRounds = 100000;

// One realized committee. Members are sorted ascending; raw_g and
// voting_power are aligned with members (non-members implicitly hold zero).
struct SelectionOutcome {
  std::vector<std::uint32_t> members;
  std::vector<double> raw_g;
  std::vector<double> voting_power;
  std::uint64_t rounds_used = 1;

  double power_of(std::uint32_t participant) const {
    for (std::size_t k = 0; k < members.size(); ++k)
      if (members[k] == participant) return voting_power[k];
    return 0.0;
  }

  // Structural invariants: exactly m distinct sorted members, powers
  // normalized from raw_g, total power 1.
  void check(std::size_t n, std::uint32_t m) const {
    if (members.size() != m) throw SortitionError("committee size mismatch");
    if (raw_g.size() != m || voting_power.size() != m)
      throw SortitionError("outcome arrays misaligned");
    double total = 0.0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (members[k] >= n) throw SortitionError("member index out of range");
      if (k > 0 && members[k] <= members[k - 1])
        throw SortitionError("members not sorted distinct");
      total += voting_power[k];
    }
    if (std::abs(total - 1.0) > kUnitSumTolerance)
      throw SortitionError("voting power does not sum to 1");
  }
};

// Fills voting_power = raw_g / sum(raw_g).
inline void normalize_outcome(SelectionOutcome& out) {
  double total = 0.0;
  for (double g : out.raw_g) total += g;
  out.voting_power.resize(out.raw_g.size());
  for (std::size_t k = 0; k < out.raw_g.size(); ++k) out.voting_power[k] = out.raw_g[k] / total;
}

}  // namespace sortition
