#include "robp/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "robp/error.hpp"

namespace robp {

namespace mp = boost::multiprecision;

DyadicRational::DyadicRational(BigInt numerator, std::uint32_t exponent)
    : _num(std::move(numerator)), _exp(exponent) {
  if (_num < 0)
    throw Error(ErrorKind::InvalidArgument, "dyadic rationals are non-negative");
  canonicalize();
}

void DyadicRational::canonicalize() {
  if (_num == 0) {
    _exp = 0;
    return;
  }
  const auto shift = std::min<std::uint32_t>(_exp, static_cast<std::uint32_t>(mp::lsb(_num)));
  _num >>= shift;
  _exp -= shift;
}

DyadicRational DyadicRational::halved() const {
  if (is_zero())
    return {};
  DyadicRational r = *this;
  if (mp::bit_test(r._num, 0))
    ++r._exp;
  else
    r._num >>= 1;
  return r;
}

DyadicRational &DyadicRational::operator+=(const DyadicRational &rhs) {
  if (rhs._exp > _exp) {
    _num <<= (rhs._exp - _exp);
    _exp = rhs._exp;
    _num += rhs._num;
  } else {
    _num += rhs._num << (_exp - rhs._exp);
  }
  canonicalize();
  return *this;
}

DyadicRational &DyadicRational::operator-=(const DyadicRational &rhs) {
  BigInt other = rhs._num;
  if (rhs._exp > _exp) {
    _num <<= (rhs._exp - _exp);
    _exp = rhs._exp;
  } else {
    other <<= (_exp - rhs._exp);
  }
  if (other > _num)
    throw Error(ErrorKind::InvalidArgument, "dyadic subtraction would go negative");
  _num -= other;
  canonicalize();
  return *this;
}

DyadicRational &DyadicRational::operator*=(const DyadicRational &rhs) {
  _num *= rhs._num;
  _exp += rhs._exp;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational &a, const DyadicRational &b) {
  const std::uint32_t e = std::max(a._exp, b._exp);
  const BigInt lhs = a._num << (e - a._exp);
  const BigInt rhs = b._num << (e - b._exp);
  if (lhs < rhs)
    return std::strong_ordering::less;
  if (lhs > rhs)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational DyadicRational::to_rational() const {
  return Rational(_num, BigInt(1) << _exp);
}

double DyadicRational::to_double() const {
  return static_cast<double>(to_rational());
}

std::string DyadicRational::to_string() const {
  if (_exp == 0)
    return _num.str();
  return _num.str() + "/" + (BigInt(1) << _exp).str();
}

std::strong_ordering compare(const DyadicRational &a, const Rational &b) {
  const Rational lhs = a.to_rational();
  if (lhs < b)
    return std::strong_ordering::less;
  if (lhs > b)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view original) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw Error(ErrorKind::ParseError, "not a number: '" + std::string(original) + "'");
  // A leading zero would select octal in the BigInt string constructor.
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

} // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_digits(text.substr(0, slash), original);
    const BigInt den = parse_digits(text.substr(slash + 1), original);
    if (den == 0)
      throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(original) + "'");
    value = Rational(num, den);
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      if (!exp_text.empty() && exp_text.front() == '+')
        exp_text.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size())
        throw Error(ErrorKind::ParseError, "bad exponent in '" + std::string(original) + "'");
      text = text.substr(0, e);
    }
    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      exponent -= static_cast<long>(text.size() - dot - 1);
    } else {
      digits = std::string(text);
    }
    BigInt num = parse_digits(digits, original);
    BigInt den = 1;
    const BigInt ten = 10;
    if (exponent >= 0)
      num *= mp::pow(ten, static_cast<unsigned>(exponent));
    else
      den = mp::pow(ten, static_cast<unsigned>(-exponent));
    value = Rational(num, den);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational &value) {
  if (mp::denominator(value) == 1)
    return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

double to_double(const Rational &value) { return static_cast<double>(value); }

} // namespace robp
