#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace nesto {

/// Subset of a small ground set; bit i stands for element i+1.
using Mask = std::uint32_t;

inline constexpr int kMaxMaskBits = 32;

constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & 1U; }
constexpr int lowest(Mask m) { return std::countr_zero(m); }

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Element indices (0-based) of `m`, ascending.
inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

/// Calls f(i) for every set bit, ascending.
template <class F>
constexpr void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(lowest(m));
    m &= m - 1;
  }
}

/// Order-preserving compression of `m` onto the positions of `support`:
/// the k-th smallest element of `support` maps to bit k.
constexpr Mask compress(Mask m, Mask support) {
  Mask out = 0;
  int k = 0;
  for_each_bit(support, [&](int i) {
    if (has(m, i)) out |= bit(k);
    ++k;
  });
  return out;
}

/// Inverse of compress.
constexpr Mask expand(Mask m, Mask support) {
  Mask out = 0;
  int k = 0;
  for_each_bit(support, [&](int i) {
    if (has(m, k)) out |= bit(i);
    ++k;
  });
  return out;
}

/// Set-size-then-lexicographic order on element lists, the usual way
/// families like {1,2,3,12,23,123} are written.
constexpr bool size_lex_less(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
  if (a == b) return false;
  // First differing element decides; the set holding the smaller one is first.
  Mask diff = a ^ b;
  return has(a, lowest(diff));
}

}  // namespace nesto
