/// @file  bitstring.hpp
/// @brief Packed n-bit input strings (n <= 64)

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace robp {

inline constexpr unsigned max_bits = 64;

/// Bit i-1 of `word` holds x_i. The textual form lists x_1 first.
struct BitString {
  std::uint64_t word = 0;
  unsigned n = 0;

  bool operator[](unsigned var) const noexcept { return (word >> (var - 1)) & 1u; }
  friend bool operator==(const BitString &, const BitString &) = default;
};

inline constexpr std::uint64_t low_mask(unsigned n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline unsigned hamming_distance(std::uint64_t a, std::uint64_t b) noexcept {
  return static_cast<unsigned>(std::popcount(a ^ b));
}

/// Next larger word with the same number of ones (Gosper's hack). `v` must
/// be nonzero and not the largest such word.
inline constexpr std::uint64_t next_combination(std::uint64_t v) noexcept {
  const std::uint64_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

/// Calls f on every n-bit mask with exactly s ones, in increasing order.
template <class F> void for_each_combination(unsigned n, unsigned s, F &&f) {
  if (s > n)
    return;
  if (s == 0) {
    f(std::uint64_t{0});
    return;
  }
  const std::uint64_t last = low_mask(s) << (n - s);
  for (std::uint64_t v = low_mask(s);; v = next_combination(v)) {
    f(v);
    if (v == last)
      break;
  }
}

/// Gathers the bits of `word` at `positions` into the low bits.
inline std::uint64_t extract_bits(std::uint64_t word, std::uint64_t positions) noexcept {
  std::uint64_t out = 0;
  for (unsigned j = 0; positions != 0; positions &= positions - 1, ++j)
    out |= ((word >> std::countr_zero(positions)) & 1u) << j;
  return out;
}

/// Inverse of extract_bits: spreads the low bits of `bits` over `positions`.
inline std::uint64_t deposit_bits(std::uint64_t bits, std::uint64_t positions) noexcept {
  std::uint64_t out = 0;
  for (; positions != 0; positions &= positions - 1, bits >>= 1)
    if (bits & 1u)
      out |= positions & -positions;
  return out;
}

/// Throws ParseError on characters other than '0'/'1' or length > 64.
BitString parse_bits(std::string_view text);
std::string format_bits(std::uint64_t word, unsigned n);
inline std::string format_bits(const BitString &b) { return format_bits(b.word, b.n); }

} // namespace robp
