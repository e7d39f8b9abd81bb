#include "robp/gf2.hpp"

#include "robp/error.hpp"

namespace robp {

Gf2Poly Gf2Poly::mul(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (a.degree() + b.degree() > 63)
    throw Error(ErrorKind::DegreeOutOfRange, "product degree exceeds 63");
  std::uint64_t out = 0;
  std::uint64_t x = a._bits;
  for (std::uint64_t y = b._bits; y != 0; y >>= 1, x <<= 1)
    if (y & 1u)
      out ^= x;
  return Gf2Poly(out);
}

Gf2Poly Gf2Poly::mod(Gf2Poly a, Gf2Poly m) {
  if (m.is_zero())
    throw Error(ErrorKind::InvalidArgument, "reduction modulo the zero polynomial");
  const int dm = m.degree();
  std::uint64_t r = a._bits;
  for (int d = Gf2Poly(r).degree(); d >= dm; d = Gf2Poly(r).degree())
    r ^= m._bits << (d - dm);
  return Gf2Poly(r);
}

Gf2Poly Gf2Poly::mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m) {
  return mod(mul(mod(a, m), mod(b, m)), m);
}

Gf2Poly Gf2Poly::powmod(Gf2Poly a, std::uint64_t e, Gf2Poly m) {
  Gf2Poly result = mod(Gf2Poly(1), m);
  Gf2Poly base = mod(a, m);
  for (; e != 0; e >>= 1) {
    if (e & 1u)
      result = mulmod(result, base, m);
    base = mulmod(base, base, m);
  }
  return result;
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    const Gf2Poly r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

std::string Gf2Poly::to_string() const {
  if (is_zero())
    return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    if (!((_bits >> d) & 1u))
      continue;
    if (!out.empty())
      out += " + ";
    out += d == 0 ? "1" : d == 1 ? "x" : "x^" + std::to_string(d);
  }
  return out;
}

namespace {

/// x^(2^k) mod f by k squarings.
Gf2Poly frobenius(unsigned k, Gf2Poly f) {
  Gf2Poly r = Gf2Poly::mod(Gf2Poly(2), f);
  for (unsigned i = 0; i < k; ++i)
    r = Gf2Poly::mulmod(r, r, f);
  return r;
}

} // namespace

bool is_irreducible(Gf2Poly f) {
  const int m = f.degree();
  if (m < 1)
    return false;
  if (m > 32)
    throw Error(ErrorKind::DegreeOutOfRange, "irreducibility test supports degree <= 32");
  const Gf2Poly x = Gf2Poly::mod(Gf2Poly(2), f);
  if (frobenius(static_cast<unsigned>(m), f) != x)
    return false;
  unsigned rest = static_cast<unsigned>(m);
  for (unsigned p = 2; p <= rest; ++p) {
    if (rest % p != 0)
      continue;
    while (rest % p == 0)
      rest /= p;
    const Gf2Poly h = frobenius(static_cast<unsigned>(m) / p, f) + x;
    if (Gf2Poly::gcd(f, h).degree() != 0)
      return false;
  }
  return true;
}

Gf2Poly irreducible_poly(unsigned m) {
  if (m < 1 || m > 32)
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(m) + " outside 1..32");
  const std::uint64_t top = std::uint64_t{1} << m;
  for (std::uint64_t low = 1; low < top; low += 2)
    if (is_irreducible(Gf2Poly(top | low)))
      return Gf2Poly(top | low);
  throw Error(ErrorKind::DegreeOutOfRange, "no irreducible polynomial found"); // unreachable
}

} // namespace robp
