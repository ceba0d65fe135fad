#pragma once

#include <bit>
#include <cstdint>

namespace stanley {

/// A squarefree exponent vector packed into a machine word: bit i-1 holds x_i.
using Mask = std::uint64_t;

inline constexpr int kMaxSquarefreeVariables = 63;

constexpr Mask bit_of(int var) { return Mask{1} << (var - 1); }

/// Mask with x_1..x_n set.
constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Deposits the low bits of `src` into the set positions of `positions`
/// (software pdep). Used to embed a small Boolean cube into the free
/// coordinates of an interval.
constexpr Mask deposit_bits(Mask src, Mask positions) {
  Mask out = 0;
  for (Mask p = positions; p != 0 && src != 0; p &= p - 1, src >>= 1) {
    if (src & 1) out |= p & (~p + 1);
  }
  return out;
}

/// Next mask with the same popcount (Gosper's hack). Caller bounds the range.
constexpr Mask next_same_popcount(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace stanley
