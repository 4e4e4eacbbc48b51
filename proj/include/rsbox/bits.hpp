#pragma once

#include <bit>
#include <cstdint>

namespace rsbox {

// Packed n-bit state: the vector (x_1, ..., x_n) is stored with x_1 in bit 0.
using word = std::uint32_t;

constexpr int max_dimension = 24;

inline constexpr word mask_of(int n) {
  return n >= 32 ? ~word{0} : (word{1} << n) - 1;
}

inline constexpr word rotr(word x, int r, int n) {
  r %= n;
  if (r == 0) return x & mask_of(n);
  return ((x >> r) | (x << (n - r))) & mask_of(n);
}

inline constexpr word rotl(word x, int r, int n) {
  r %= n;
  return rotr(x, n - r, n);
}

// The cyclic right shift S(x_1,...,x_n) = (x_n, x_1, ..., x_{n-1}) moves every
// coordinate up by one position, which is a left rotation of the packed word.
// shift_s applies S^m; m may be negative.
inline constexpr word shift_s(word x, int m, int n) {
  m %= n;
  if (m < 0) m += n;
  return rotl(x, m, n);
}

inline constexpr int parity(word x) { return std::popcount(x) & 1; }

inline constexpr int parity64(std::uint64_t x) { return std::popcount(x) & 1; }

// Reverses the low n bits (coordinate reversal x_i <-> x_{n+1-i}).
inline constexpr word reverse_bits(word x, int n) {
  word r = 0;
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | ((x >> i) & 1);
  }
  return r;
}

}  // namespace rsbox
