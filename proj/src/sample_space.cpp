#include "robp/sample_space.hpp"

#include <cmath>
#include <limits>

#include "robp/error.hpp"

namespace robp {

namespace mp = boost::multiprecision;

BitStringSet::BitStringSet(unsigned n) : _n(n) {
  if (n > max_bits)
    throw Error(ErrorKind::InvalidArgument, "bit strings longer than 64 are not supported");
}

bool BitStringSet::insert(std::uint64_t word, std::uint64_t weight) {
  if (word & ~low_mask(_n))
    throw Error(ErrorKind::LengthMismatch, "member has bits beyond position " + std::to_string(_n));
  _total += weight;
  auto [it, inserted] = _index.emplace(word, _members.size());
  if (inserted) {
    _members.push_back(word);
    _weights.push_back(weight);
  } else {
    _weights[it->second] += weight;
  }
  return inserted;
}

BitStringSet BitStringSet::cube(unsigned n) {
  if (n > 30)
    throw Error(ErrorKind::SizeCapExceeded, "cube of dimension " + std::to_string(n) + " is too large");
  BitStringSet out(n);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
    out.insert(w);
  return out;
}

namespace {

std::uint64_t saturating_binomial(unsigned n, unsigned s) {
  long double v = 1;
  for (unsigned i = 1; i <= s; ++i)
    v = v * (n - s + i) / i;
  return v > 1.8e19L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(std::llround(v));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

} // namespace

BitStringSet aghp_powering(unsigned n, unsigned m, Gf2Poly modulus, std::uint64_t sample_cap) {
  if (m < 1 || m > 16)
    throw Error(ErrorKind::DegreeOutOfRange, "field degree " + std::to_string(m) + " outside 1..16");
  if (modulus.degree() != static_cast<int>(m))
    throw Error(ErrorKind::DegreeOutOfRange, "modulus " + modulus.to_string() + " does not have degree " + std::to_string(m));
  if (n < 1 || n > max_bits)
    throw Error(ErrorKind::InvalidArgument, "n must lie in 1..64");
  const std::uint64_t field = std::uint64_t{1} << m;
  if (field * field > sample_cap)
    throw Error(ErrorKind::SizeCapExceeded,
                "2^" + std::to_string(2 * m) + " samples exceed the cap of " + std::to_string(sample_cap));

  BitStringSet out(n);
  std::vector<std::uint64_t> powers(n);
  for (std::uint64_t x = 0; x < field; ++x) {
    Gf2Poly p(1);
    for (unsigned i = 0; i < n; ++i) {
      powers[i] = p.bits();
      p = Gf2Poly::mulmod(p, Gf2Poly(x), modulus);
    }
    for (std::uint64_t y = 0; y < field; ++y) {
      std::uint64_t word = 0;
      for (unsigned i = 0; i < n; ++i)
        word |= static_cast<std::uint64_t>(std::popcount(powers[i] & y) & 1) << i;
      out.insert(word);
    }
  }
  return out;
}

BiasResult max_bias(const BitStringSet &set, std::optional<unsigned> weight_cap, std::uint64_t budget) {
  const unsigned n = set.n();
  const unsigned cap = std::min(weight_cap.value_or(n), n);
  std::uint64_t masks = 0;
  for (unsigned s = 1; s <= cap; ++s)
    masks = saturating_add(masks, saturating_binomial(n, s));
  if (saturating_mul(masks, std::max<std::uint64_t>(set.size(), 1)) > budget)
    throw Error(ErrorKind::BudgetExceeded,
                std::to_string(masks) + " masks over " + std::to_string(set.size()) + " members exceed the budget");
  if (set.empty())
    throw Error(ErrorKind::InvalidArgument, "bias of an empty set is undefined");

  const auto members = set.members();
  const auto weights = set.weights();
  BiasResult result;
  result.value = 0;
  std::uint64_t best = 0;
  for (unsigned s = 1; s <= cap; ++s)
    for_each_combination(n, s, [&](std::uint64_t mask) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < members.size(); ++i)
        sum += (std::popcount(members[i] & mask) & 1) ? -static_cast<std::int64_t>(weights[i])
                                                      : static_cast<std::int64_t>(weights[i]);
      const std::uint64_t magnitude = static_cast<std::uint64_t>(sum < 0 ? -sum : sum);
      if (magnitude > best || result.masks_checked == 0) {
        best = magnitude;
        result.worst_mask = mask;
      }
      ++result.masks_checked;
    });
  result.value = Rational(BigInt(best), BigInt(set.total_weight()));
  return result;
}

DeviationResult kwise_deviation(const BitStringSet &set, unsigned k, std::uint64_t budget) {
  const unsigned n = set.n();
  k = std::min(k, n);
  if (k > 30)
    throw Error(ErrorKind::BudgetExceeded, "pattern tables for |S| > 30 are not supported");
  std::uint64_t cost = 0;
  for (unsigned s = 0; s <= k; ++s)
    cost = saturating_add(cost, saturating_mul(saturating_binomial(n, s), set.size() + (std::uint64_t{1} << s)));
  if (cost > budget)
    throw Error(ErrorKind::BudgetExceeded, "restriction count " + std::to_string(cost) + " exceeds the budget");
  if (set.empty())
    throw Error(ErrorKind::InvalidArgument, "deviation of an empty set is undefined");

  const auto members = set.members();
  const auto weights = set.weights();
  const BigInt total = set.total_weight();
  DeviationResult result;
  result.value = 0;
  std::vector<std::uint64_t> counts;
  for (unsigned s = 1; s <= k; ++s)
    for_each_combination(n, s, [&](std::uint64_t positions) {
      counts.assign(std::size_t{1} << s, 0);
      for (std::size_t i = 0; i < members.size(); ++i)
        counts[extract_bits(members[i], positions)] += weights[i];
      for (std::uint64_t pattern = 0; pattern < counts.size(); ++pattern) {
        // |count/total - 1/2^s| = |count * 2^s - total| / (total * 2^s)
        const BigInt scaled = BigInt(counts[pattern]) << s;
        const BigInt diff = scaled > total ? BigInt(scaled - total) : BigInt(total - scaled);
        const Rational dev(diff, total << s);
        if (dev > result.value) {
          result.value = dev;
          result.worst_positions = positions;
          result.worst_pattern = pattern;
        }
      }
    });
  return result;
}

BitStringSet hamming_ball(const BitString &center, unsigned radius) {
  BitStringSet out(center.n);
  for (unsigned d = 0; d <= std::min(radius, center.n); ++d)
    for_each_combination(center.n, d, [&](std::uint64_t flips) { out.insert(center.word ^ flips); });
  return out;
}

BitStringSet expand(const BitStringSet &set, unsigned radius) {
  BitStringSet out(set.n());
  for (std::uint64_t member : set.members())
    for (unsigned d = 0; d <= std::min(radius, set.n()); ++d)
      for_each_combination(set.n(), d, [&](std::uint64_t flips) {
        if (!out.contains(member ^ flips))
          out.insert(member ^ flips);
      });
  return out;
}

namespace {

GeneratorParams base_params(const Rational &epsilon, unsigned n) {
  if (epsilon <= 0 || epsilon >= 1)
    throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0, 1)");
  if (n < 2)
    throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  GeneratorParams p;
  p.n = n;
  p.epsilon = epsilon;
  const double eps = to_double(epsilon);
  p.c_threshold = std::pow(2.0 / eps * std::log(1.0 / eps), 2);
  std::uint64_t c = static_cast<std::uint64_t>(std::floor(p.c_threshold)) + 1;
  if (c % 2 == 0)
    ++c;
  p.C = c;
  p.k = static_cast<std::uint64_t>(std::ceil(static_cast<double>(c + 2) * std::log2(static_cast<double>(n))));
  return p;
}

void finish(GeneratorParams &p, std::uint64_t sample_cap) {
  p.set_size = BigInt(1) << (2 * p.m);
  p.feasible_at_desk_scale = p.m <= 16 && p.set_size <= sample_cap;
  if (p.m <= 32)
    p.modulus = irreducible_poly(static_cast<unsigned>(p.m));
}

} // namespace

GeneratorParams richness_params(const Rational &epsilon, unsigned n, std::uint64_t sample_cap) {
  GeneratorParams p = base_params(epsilon, n);
  if (static_cast<double>(p.C + 3) * std::log2(static_cast<double>(n)) > max_exact_bits)
    throw Error(ErrorKind::SizeCapExceeded, "C = " + std::to_string(p.C) + " makes 1/n^(C+3) too large to hold exactly");
  const BigInt bound_den = mp::pow(BigInt(n), static_cast<unsigned>(p.C + 3));
  p.beta = Rational(BigInt(1), bound_den);
  // Least m with (n-1)/2^m < 1/n^(C+3), i.e. 2^m > (n-1) n^(C+3).
  const BigInt product = BigInt(n - 1) * bound_den;
  p.m = product == 0 ? 0 : mp::msb(product) + 1;
  finish(p, sample_cap);
  return p;
}

GeneratorParams params_for_degree(const Rational &epsilon, unsigned n, unsigned m, std::uint64_t sample_cap) {
  GeneratorParams p = base_params(epsilon, n);
  p.m = m;
  p.beta = Rational(BigInt(n - 1), BigInt(1) << m);
  finish(p, sample_cap);
  return p;
}

} // namespace robp
