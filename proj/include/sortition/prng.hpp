#pragma once

#include <cstdint>
#include <vector>

#include "sortition/errors.hpp"

namespace sortition {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

// Counter-based splitmix64. Draw k of a stream is mix64(seed + k*golden), so
// output depends only on (seed, counter) — replayable and platform independent.
class PrngStream {
 public:
  explicit PrngStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() {
    ++counter_;
    return detail::mix64(seed_ + counter_ * detail::kGolden);
  }

  // Uniform on [0,1) with 53 random bits.
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound) via multiply-shift with rejection (exactly unbiased).
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound == 0) throw SortitionError("bounded() needs a positive bound");
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t cutoff = std::uint64_t(0) - bound;
      const std::uint64_t threshold = cutoff % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Independent stream for lane `lane`; used to fan trials out across workers
  // without sharing counters.
  PrngStream substream(std::uint64_t lane) const {
    return PrngStream(detail::mix64(seed_ ^ detail::mix64(lane + detail::kGolden)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Uniform M-subset of {0..n-1}, returned sorted ascending. Partial
// Fisher-Yates over a sparse map, so cost is O(m) not O(n).
std::vector<std::uint32_t> sample_uniform_subset(PrngStream& stream, std::uint32_t n,
                                                 std::uint32_t m);

// In-place full Fisher-Yates permutation of `items`.
template <typename T>
void shuffle(PrngStream& stream, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(stream.bounded(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace sortition
