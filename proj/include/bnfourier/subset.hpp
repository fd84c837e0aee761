#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bnf {

/// Maximum arity the bitmask types can address. Dense tables are further
/// limited by the configurable arity cap.
inline constexpr unsigned kMaxArity = 30;

/// Default arity cap for dense truth tables and spectra.
inline constexpr unsigned kDefaultArityCap = 25;

/// A set of variable indices, bit i set iff variable i (0-based) is a member.
struct SubsetMask {
  std::uint64_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t b) : bits(b) {}

  static constexpr SubsetMask empty() { return SubsetMask{}; }
  static constexpr SubsetMask full(unsigned arity) {
    return SubsetMask{arity >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << arity) - 1};
  }
  static constexpr SubsetMask single(unsigned i) { return SubsetMask{std::uint64_t{1} << i}; }
  static SubsetMask of(std::initializer_list<unsigned> members) {
    SubsetMask m;
    for (unsigned i : members) m.bits |= std::uint64_t{1} << i;
    return m;
  }

  constexpr bool contains(unsigned i) const { return (bits >> i) & 1u; }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits)); }
  constexpr bool within(unsigned arity) const { return (bits & ~full(arity).bits) == 0; }
  constexpr bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }

  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask{bits & o.bits}; }
  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask{bits | o.bits}; }
  constexpr SubsetMask without(SubsetMask o) const { return SubsetMask{bits & ~o.bits}; }

  /// Members in ascending order.
  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
    return out;
  }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
};

/// Scatter the low bits of `compact` onto the set positions of `mask`.
constexpr std::uint64_t deposit_bits(std::uint64_t compact, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, compact >>= 1) {
    if (compact & 1u) out |= m & (~m + 1);
  }
  return out;
}

/// Gather the bits of `value` at the set positions of `mask` into the low bits.
constexpr std::uint64_t extract_bits(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  unsigned k = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1, ++k) {
    if (value & m & (~m + 1)) out |= std::uint64_t{1} << k;
  }
  return out;
}

}  // namespace bnf
