/// @file  sample_space.hpp
/// @brief Small-bias sample spaces, their verification oracles, Hamming-ball
///        expansion and the parameter formula for almost k-wise independence

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "robp/bitstring.hpp"
#include "robp/dyadic.hpp"
#include "robp/gf2.hpp"

namespace robp {

/// Distinct n-bit strings in insertion order, each with a multiplicity.
///
/// Multiplicities let a sample space that lists some string several times
/// keep its exact distribution; set-level operations (hitting, richness,
/// expansion) only look at the distinct members.
class BitStringSet {
public:
  BitStringSet() = default;
  explicit BitStringSet(unsigned n);

  unsigned n() const noexcept { return _n; }
  std::size_t size() const noexcept { return _members.size(); }
  bool empty() const noexcept { return _members.empty(); }
  std::uint64_t total_weight() const noexcept { return _total; }
  std::span<const std::uint64_t> members() const noexcept { return _members; }
  std::span<const std::uint64_t> weights() const noexcept { return _weights; }
  BitString at(std::size_t i) const { return {_members.at(i), _n}; }

  /// Returns true when `word` was not present yet.
  bool insert(std::uint64_t word, std::uint64_t weight = 1);
  bool contains(std::uint64_t word) const { return _index.contains(word); }

  /// Full cube {0,1}^n in increasing word order.
  static BitStringSet cube(unsigned n);

private:
  unsigned _n = 0;
  std::uint64_t _total = 0;
  std::vector<std::uint64_t> _members;
  std::vector<std::uint64_t> _weights;
  std::unordered_map<std::uint64_t, std::size_t> _index;
};

inline constexpr std::uint64_t default_sample_cap = std::uint64_t{1} << 26;

/// Powering construction over GF(2^m): for every pair (x, y) of field
/// elements, taken in lexicographic order, the sample has bit i equal to
/// <x^i, y> for i = 0..n-1. The multiset has 2^(2m) samples and bias at most
/// (n-1)/2^m. Throws SizeCapExceeded and DegreeOutOfRange (m outside 1..16
/// or a modulus of the wrong degree).
BitStringSet aghp_powering(unsigned n, unsigned m, Gf2Poly modulus,
                           std::uint64_t sample_cap = default_sample_cap);

inline constexpr std::uint64_t default_oracle_budget = std::uint64_t{1} << 32;

struct BiasResult {
  Rational value;
  std::uint64_t worst_mask = 0;
  std::uint64_t masks_checked = 0;
};

/// max over non-zero masks a (optionally of weight <= weight_cap) of
/// |E[(-1)^<a, s>]| under the set's multiplicities. Throws BudgetExceeded
/// when masks * members exceeds `budget`.
BiasResult max_bias(const BitStringSet &set, std::optional<unsigned> weight_cap = std::nullopt,
                    std::uint64_t budget = default_oracle_budget);

struct DeviationResult {
  Rational value;
  std::uint64_t worst_positions = 0; ///< the set S as a mask
  std::uint64_t worst_pattern = 0;   ///< c restricted to S, packed in S order
};

/// max over |S| <= k and c of | Pr[s agrees with c on S] - 2^-|S| |.
DeviationResult kwise_deviation(const BitStringSet &set, unsigned k,
                                std::uint64_t budget = default_oracle_budget);

/// Every n-bit string within Hamming distance `radius` of `center`, by
/// increasing distance.
BitStringSet hamming_ball(const BitString &center, unsigned radius);

/// Union of the balls around every member, first occurrence order.
BitStringSet expand(const BitStringSet &set, unsigned radius);

struct GeneratorParams {
  unsigned n = 0;
  Rational epsilon;
  /// (2/eps ln(1/eps))^2, the threshold C must exceed.
  double c_threshold = 0;
  /// Least odd integer above the threshold.
  std::uint64_t C = 1;
  /// ceil((C+2) log2 n)
  std::uint64_t k = 0;
  /// Target deviation: the strict upper bound 1/n^(C+3) from the formula, or
  /// (n-1)/2^m for an explicitly chosen field degree.
  Rational beta;
  std::uint64_t m = 0;
  std::optional<Gf2Poly> modulus;
  /// 2^(2m)
  BigInt set_size;
  bool feasible_at_desk_scale = false;
};

/// Bit budget for the exact value of n^(C+3).
inline constexpr double max_exact_bits = 1 << 22;

/// Parameters under which an almost k-wise independent set is rich: m is the
/// least degree with (n-1)/2^m < 1/n^(C+3). Throws SizeCapExceeded when that
/// power needs more than max_exact_bits bits (epsilon below about 0.01).
GeneratorParams richness_params(const Rational &epsilon, unsigned n,
                                std::uint64_t sample_cap = default_sample_cap);

/// Same C and k, but with an explicitly chosen field degree m and the
/// deviation (n-1)/2^m that degree guarantees.
GeneratorParams params_for_degree(const Rational &epsilon, unsigned n, unsigned m,
                                  std::uint64_t sample_cap = default_sample_cap);

} // namespace robp
