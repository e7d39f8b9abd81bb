/// @file  dyadic.hpp
/// @brief Exact non-negative dyadic rationals and general rationals

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace robp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Non-negative number of the form numerator / 2^exponent.
///
/// Always kept in canonical form: the numerator is odd, or the value is zero
/// and stored as 0 / 2^0. Every probability that arises from following fair
/// bit splits through a branching program lives in this type, so sums,
/// halvings and comparisons never round.
class DyadicRational {
public:
  DyadicRational() = default;
  DyadicRational(BigInt numerator, std::uint32_t exponent);

  static DyadicRational zero() { return {}; }
  static DyadicRational one() { return {1, 0}; }
  /// 1 / 2^e
  static DyadicRational inverse_pow2(std::uint32_t e) { return {1, e}; }

  const BigInt &numerator() const noexcept { return _num; }
  std::uint32_t exponent() const noexcept { return _exp; }
  bool is_zero() const noexcept { return _num == 0; }

  DyadicRational halved() const;

  DyadicRational &operator+=(const DyadicRational &rhs);
  /// Throws InvalidArgument when the result would be negative.
  DyadicRational &operator-=(const DyadicRational &rhs);
  DyadicRational &operator*=(const DyadicRational &rhs);

  friend DyadicRational operator+(DyadicRational a, const DyadicRational &b) {
    return a += b;
  }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational &b) {
    return a -= b;
  }
  friend DyadicRational operator*(DyadicRational a, const DyadicRational &b) {
    return a *= b;
  }

  friend bool operator==(const DyadicRational &, const DyadicRational &) = default;
  friend std::strong_ordering operator<=>(const DyadicRational &a,
                                          const DyadicRational &b);

  Rational to_rational() const;
  double to_double() const;
  /// "0", "1", "3/4", "5/32", ...
  std::string to_string() const;

private:
  void canonicalize();

  BigInt _num = 0;
  std::uint32_t _exp = 0;
};

std::strong_ordering compare(const DyadicRational &a, const Rational &b);
inline bool operator>=(const DyadicRational &a, const Rational &b) {
  return compare(a, b) != std::strong_ordering::less;
}
inline bool operator<(const DyadicRational &a, const Rational &b) {
  return compare(a, b) == std::strong_ordering::less;
}

/// Parses "0.9", "9/10", "1", "1e-3" style input into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &value);
double to_double(const Rational &value);

} // namespace robp
