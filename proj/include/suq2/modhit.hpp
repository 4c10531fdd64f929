#pragma once

// Exact first-entry arithmetic for progressions mod M. Everything fits in
// 62-bit moduli; intermediate products go through __int128.

#include <cstdint>

namespace suq2 {
namespace modhit {

using i64 = long long;
using i128 = __int128;

constexpr i64 miss = -1;

inline i64 mulmod(i64 x, i64 y, i64 m) {
  i128 p = (i128)(x % m) * (y % m) % m;
  if (p < 0) p += m;
  return (i64)p;
}

// least x >= 0 with (a*x + b) mod m in [0, len); miss if none.
// Runs in O(log m): each recursion replaces the modulus by a <= m/2.
inline i64 first_hit(i64 a, i64 b, i64 m, i64 len) {
  a %= m;
  if (a < 0) a += m;
  b %= m;
  if (b < 0) b += m;
  if (len <= 0) return miss;
  if (len >= m) return 0;
  if (b < len) return 0;
  if (a == 0) return miss;
  if (2 * a > m) {
    // reflect y -> len-1-y: preserves [0,len) and the hit set, halves the slope
    a = m - a;
    b = (len - 1 - b) % m;
    if (b < 0) b += m;
  }
  if (len > a) {
    // values climb from b >= len in steps a and land in [0,a) at the wrap
    return (m - b + a - 1) / a;
  }
  // hits occur only at wrap landings (b - k*m) mod a, k >= 1
  i64 mm = (a - m % a) % a;
  i64 bm = (b - m) % a;
  if (bm < 0) bm += a;
  i64 j = first_hit(mm, bm, a, len);
  if (j == miss) return miss;
  i128 k = (i128)j + 1;
  i128 v = ((i128)b - k * m) % a;
  if (v < 0) v += a;
  return (i64)((k * m + v - b) / a);
}

// least x >= 0 with the residue of a*x+b within dist of 0 (wrapped)
inline i64 hit_near_zero(i64 a, i64 b, i64 m, i64 dist) {
  if (dist < 0) return miss;
  return first_hit(a, b + dist, m, 2 * dist + 1);
}

// least x >= 0 with the residue of a*x+b within dist of m/2 (m even)
inline i64 hit_near_half(i64 a, i64 b, i64 m, i64 dist) {
  if (dist < 0) return miss;
  return first_hit(a, b - (m / 2 - dist), m, 2 * dist + 1);
}

} // namespace modhit
} // namespace suq2
