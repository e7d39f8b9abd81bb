/// @file  gf2.hpp
/// @brief Polynomials over GF(2) packed into a 64-bit word

#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace robp {

/// Bit i is the coefficient of x^i; degrees up to 63.
class Gf2Poly {
public:
  constexpr Gf2Poly() = default;
  constexpr explicit Gf2Poly(std::uint64_t bits) : _bits(bits) {}

  constexpr std::uint64_t bits() const noexcept { return _bits; }
  constexpr bool is_zero() const noexcept { return _bits == 0; }
  /// -1 for the zero polynomial.
  constexpr int degree() const noexcept { return 63 - std::countl_zero(_bits); }

  friend constexpr Gf2Poly operator+(Gf2Poly a, Gf2Poly b) noexcept { return Gf2Poly(a._bits ^ b._bits); }
  friend constexpr bool operator==(Gf2Poly, Gf2Poly) = default;

  /// Carry-less product; throws DegreeOutOfRange past degree 63.
  static Gf2Poly mul(Gf2Poly a, Gf2Poly b);
  /// Remainder of a modulo m (m != 0).
  static Gf2Poly mod(Gf2Poly a, Gf2Poly m);
  static Gf2Poly mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m);
  static Gf2Poly powmod(Gf2Poly a, std::uint64_t e, Gf2Poly m);
  static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

  /// x^1 + x^0 style rendering, highest degree first.
  std::string to_string() const;

private:
  std::uint64_t _bits = 0;
};

/// Rabin's test: f of degree m is irreducible iff x^(2^m) = x (mod f) and
/// gcd(x^(2^(m/p)) - x, f) = 1 for every prime p dividing m.
bool is_irreducible(Gf2Poly f);

/// Smallest irreducible polynomial of degree m with non-zero constant term
/// (x + 1 for m = 1). Throws DegreeOutOfRange outside 1..32.
Gf2Poly irreducible_poly(unsigned m);

} // namespace robp
