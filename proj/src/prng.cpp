#include "sortition/prng.hpp"

#include <algorithm>
#include <unordered_map>

namespace sortition {

std::vector<std::uint32_t> sample_uniform_subset(PrngStream& stream, std::uint32_t n,
                                                 std::uint32_t m) {
  if (m > n) throw SizeExceedsPopulation(m, n);
  std::unordered_map<std::uint32_t, std::uint32_t> moved;
  moved.reserve(2 * static_cast<std::size_t>(m));
  std::vector<std::uint32_t> out(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::uint32_t>(stream.bounded(n - i));
    auto it_j = moved.find(j);
    const std::uint32_t value_j = (it_j == moved.end()) ? j : it_j->second;
    auto it_i = moved.find(i);
    const std::uint32_t value_i = (it_i == moved.end()) ? i : it_i->second;
    moved[j] = value_i;
    out[i] = value_j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sortition
