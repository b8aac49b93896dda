#pragma once

#include <cstdint>
#include <string>

#include "sortition/errors.hpp"

namespace sortition {

// Unsigned 192-bit integer, just wide enough for exact subset counts at the
// scales this toolkit supports: binom(1000,20) needs 139 bits and alternating
// sums stay below 2^160. Addition/subtraction wrap modulo 2^192 on purpose —
// inclusion-exclusion walks through "negative" partials and two's complement
// keeps the final in-range value exact.
struct U192 {
  std::uint64_t lo = 0;
  std::uint64_t mid = 0;
  std::uint64_t hi = 0;

  constexpr U192() = default;
  constexpr explicit U192(std::uint64_t v) : lo(v) {}

  constexpr bool is_zero() const { return lo == 0 && mid == 0 && hi == 0; }

  constexpr bool fits_u64() const { return mid == 0 && hi == 0; }

  constexpr std::uint64_t as_u64() const { return lo; }

  U192& operator+=(const U192& o) {
    const std::uint64_t l = lo + o.lo;
    const std::uint64_t carry0 = (l < lo) ? 1 : 0;
    const std::uint64_t m = mid + o.mid;
    const std::uint64_t carry1a = (m < mid) ? 1 : 0;
    const std::uint64_t m2 = m + carry0;
    const std::uint64_t carry1b = (m2 < m) ? 1 : 0;
    hi += o.hi + carry1a + carry1b;
    mid = m2;
    lo = l;
    return *this;
  }

  U192& operator-=(const U192& o) {
    const std::uint64_t l = lo - o.lo;
    const std::uint64_t borrow0 = (lo < o.lo) ? 1 : 0;
    const std::uint64_t m = mid - o.mid;
    const std::uint64_t borrow1a = (mid < o.mid) ? 1 : 0;
    const std::uint64_t m2 = m - borrow0;
    const std::uint64_t borrow1b = (m < borrow0) ? 1 : 0;
    hi -= o.hi + borrow1a + borrow1b;
    mid = m2;
    lo = l;
    return *this;
  }

  friend U192 operator+(U192 a, const U192& b) { return a += b; }
  friend U192 operator-(U192 a, const U192& b) { return a -= b; }

  friend constexpr bool operator==(const U192& a, const U192& b) {
    return a.lo == b.lo && a.mid == b.mid && a.hi == b.hi;
  }
  friend constexpr bool operator!=(const U192& a, const U192& b) { return !(a == b); }
  friend constexpr bool operator<(const U192& a, const U192& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    if (a.mid != b.mid) return a.mid < b.mid;
    return a.lo < b.lo;
  }
  friend constexpr bool operator<=(const U192& a, const U192& b) { return !(b < a); }
  friend constexpr bool operator>(const U192& a, const U192& b) { return b < a; }
  friend constexpr bool operator>=(const U192& a, const U192& b) { return !(a < b); }

  // Checked multiply by a 64-bit factor; overflow past 192 bits throws.
  U192 mul_u64(std::uint64_t f) const {
    using u128 = unsigned __int128;
    const u128 p0 = static_cast<u128>(lo) * f;
    const u128 p1 = static_cast<u128>(mid) * f;
    const u128 p2 = static_cast<u128>(hi) * f;
    U192 r;
    r.lo = static_cast<std::uint64_t>(p0);
    const u128 m = p1 + (p0 >> 64);
    r.mid = static_cast<std::uint64_t>(m);
    const u128 h = p2 + (m >> 64);
    r.hi = static_cast<std::uint64_t>(h);
    if ((h >> 64) != 0) throw CountOverflow("192-bit count overflow in multiply");
    return r;
  }

  // Divide by a 64-bit divisor; returns quotient, writes remainder if asked.
  U192 div_u64(std::uint64_t d, std::uint64_t* remainder = nullptr) const {
    using u128 = unsigned __int128;
    if (d == 0) throw SortitionError("division by zero");
    U192 q;
    u128 rem = 0;
    const u128 cur_hi = (rem << 64) | hi;
    q.hi = static_cast<std::uint64_t>(cur_hi / d);
    rem = cur_hi % d;
    const u128 cur_mid = (rem << 64) | mid;
    q.mid = static_cast<std::uint64_t>(cur_mid / d);
    rem = cur_mid % d;
    const u128 cur_lo = (rem << 64) | lo;
    q.lo = static_cast<std::uint64_t>(cur_lo / d);
    rem = cur_lo % d;
    if (remainder) *remainder = static_cast<std::uint64_t>(rem);
    return q;
  }

  double to_double() const {
    return static_cast<double>(hi) * 0x1.0p128 + static_cast<double>(mid) * 0x1.0p64 +
           static_cast<double>(lo);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    constexpr std::uint64_t kChunk = 1000000000000000000ull;  // 10^18
    std::string out;
    U192 v = *this;
    while (!v.is_zero()) {
      std::uint64_t rem = 0;
      v = v.div_u64(kChunk, &rem);
      std::string part = std::to_string(rem);
      if (!v.is_zero()) part.insert(0, 18 - part.size(), '0');
      out.insert(0, part);
    }
    return out;
  }
};

// Exact binomial coefficient; throws CountOverflow beyond 192 bits.
inline U192 binomial_u192(std::uint64_t n, std::uint64_t k) {
  if (k > n) return U192(0);
  if (k > n - k) k = n - k;
  U192 c(1);
  for (std::uint64_t i = 1; i <= k; ++i) {
    // exact at every step: c * (n-k+i) is divisible by i
    std::uint64_t rem = 0;
    c = c.mul_u64(n - k + i).div_u64(i, &rem);
    if (rem != 0) throw SortitionError("binomial division not exact");
  }
  return c;
}

}  // namespace sortition
