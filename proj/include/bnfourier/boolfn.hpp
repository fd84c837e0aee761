#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnfourier/subset.hpp"

namespace bnf {

/// Labels "x1", "x2", ..., "xn".
std::vector<std::string> default_labels(unsigned arity);

/// A Boolean function {-1,+1}^n -> {-1,+1} stored as a packed truth table.
///
/// Bit b of the table is f(x) for the point x with x_i = +1 iff bit i of b is
/// set; a table bit of 1 means output +1. Instances are immutable.
class BoolFn {
 public:
  /// The constant -1 function of arity 0.
  BoolFn();

  /// Takes ownership of a packed table. `words` must hold exactly
  /// max(1, 2^n / 64) words; bits beyond 2^n must be clear.
  BoolFn(std::vector<std::string> labels, std::vector<std::uint64_t> words,
         unsigned cap = kDefaultArityCap);

  static BoolFn constant(bool value, std::vector<std::string> labels = {});

  /// Builds the table by calling `pred(index)` for every point index.
  template <class Pred>
  static BoolFn tabulate(std::vector<std::string> labels, Pred&& pred, unsigned cap = kDefaultArityCap) {
    auto words = blank_words(static_cast<unsigned>(labels.size()), cap);
    const std::uint64_t n = std::uint64_t{1} << labels.size();
    for (std::uint64_t x = 0; x < n; ++x) {
      if (pred(x)) words[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
    return BoolFn(std::move(labels), std::move(words), cap);
  }

  /// Parses the hex form produced by to_hex().
  static BoolFn from_hex(std::vector<std::string> labels, std::string_view hex,
                         unsigned cap = kDefaultArityCap);

  unsigned arity() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity(); }
  std::span<const std::uint64_t> words() const { return words_; }

  bool bit(std::uint64_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  int value(std::uint64_t index) const { return bit(index) ? 1 : -1; }

  /// f(x) for an assignment of n signs (each +1 or -1).
  int evaluate(std::span<const int> signs) const;

  std::uint64_t count_ones() const;
  bool is_constant() const;

  /// Hex digits, least significant nibble first: digit k holds table bits
  /// 4k..4k+3 with bit 4k in the digit's lowest position. Arity < 2 tables
  /// occupy a single digit.
  std::string to_hex() const;

  /// Same function under new labels (arity must match).
  BoolFn relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const BoolFn&, const BoolFn&) = default;

  static std::vector<std::uint64_t> blank_words(unsigned arity, unsigned cap = kDefaultArityCap);

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> words_;
};

/// Variables i for which some x has f(x) != f(x with x_i flipped).
SubsetMask relevant_variables(const BoolFn& f);

/// Arity n-1 function obtained by fixing x_i = sign.
BoolFn restrict(const BoolFn& f, unsigned i, int sign);

/// Keeps only the variables in `keep`, fixing the others to -1. Intended for
/// dropping irrelevant variables, where the fixed value does not matter.
BoolFn project(const BoolFn& f, SubsetMask keep);

/// Drops every irrelevant variable.
BoolFn prune_irrelevant(const BoolFn& f);

}  // namespace bnf
