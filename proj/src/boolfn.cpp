#include "bnfourier/boolfn.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "bnfourier/error.hpp"

namespace bnf {

namespace {

// Word masks selecting the points with x_i = -1, for i < 6.
constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

std::size_t word_count(unsigned arity) {
  return arity <= 6 ? 1 : std::size_t{1} << (arity - 6);
}

std::uint64_t tail_mask(unsigned arity) {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::vector<std::string> default_labels(unsigned arity) {
  std::vector<std::string> out;
  out.reserve(arity);
  for (unsigned i = 0; i < arity; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

std::vector<std::uint64_t> BoolFn::blank_words(unsigned arity, unsigned cap) {
  const unsigned limit = std::min(cap, kMaxArity);
  if (arity > limit) {
    throw CapExceeded("truth table of arity " + std::to_string(arity) + " exceeds the arity cap of " +
                          std::to_string(limit),
                      arity, limit);
  }
  return std::vector<std::uint64_t>(word_count(arity), 0);
}

BoolFn::BoolFn() : words_(1, 0) {}

BoolFn::BoolFn(std::vector<std::string> labels, std::vector<std::uint64_t> words, unsigned cap)
    : labels_(std::move(labels)), words_(std::move(words)) {
  const unsigned n = arity();
  const unsigned limit = std::min(cap, kMaxArity);
  if (n > limit) {
    throw CapExceeded("truth table of arity " + std::to_string(n) + " exceeds the arity cap of " +
                          std::to_string(limit),
                      n, limit);
  }
  if (words_.size() != word_count(n)) {
    throw InputError("truth table for arity " + std::to_string(n) + " needs " +
                     std::to_string(word_count(n)) + " words, got " + std::to_string(words_.size()));
  }
  if ((words_.back() & ~tail_mask(n)) != 0) throw InputError("truth table has bits set beyond 2^arity");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InputError("duplicate variable label '" + l + "'");
  }
}

BoolFn BoolFn::constant(bool value, std::vector<std::string> labels) {
  const auto n = static_cast<unsigned>(labels.size());
  auto words = blank_words(n, kMaxArity);
  if (value) {
    std::fill(words.begin(), words.end(), ~std::uint64_t{0});
    words.back() &= tail_mask(n);
  }
  return BoolFn(std::move(labels), std::move(words), kMaxArity);
}

BoolFn BoolFn::from_hex(std::vector<std::string> labels, std::string_view hex, unsigned cap) {
  const auto n = static_cast<unsigned>(labels.size());
  auto words = blank_words(n, cap);
  const std::uint64_t bits = std::uint64_t{1} << n;
  const std::size_t digits = bits < 4 ? 1 : bits / 4;
  if (hex.size() != digits) {
    throw InputError("hex truth table for arity " + std::to_string(n) + " needs " + std::to_string(digits) +
                     " digits, got " + std::to_string(hex.size()));
  }
  for (std::size_t k = 0; k < digits; ++k) {
    const int v = hex_value(hex[k]);
    if (v < 0) throw InputError(std::string("invalid hex digit '") + hex[k] + "'");
    const std::uint64_t base = 4 * k;
    words[base >> 6] |= static_cast<std::uint64_t>(v) << (base & 63);
  }
  if ((words.back() & ~tail_mask(n)) != 0) throw InputError("hex truth table has bits set beyond 2^arity");
  return BoolFn(std::move(labels), std::move(words), cap);
}

int BoolFn::evaluate(std::span<const int> signs) const {
  if (signs.size() != arity()) {
    throw InputError("assignment has " + std::to_string(signs.size()) + " entries, function arity is " +
                     std::to_string(arity()));
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == 1) {
      index |= std::uint64_t{1} << i;
    } else if (signs[i] != -1) {
      throw InputError("assignment entries must be +1 or -1");
    }
  }
  return value(index);
}

std::uint64_t BoolFn::count_ones() const {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool BoolFn::is_constant() const {
  const auto ones = count_ones();
  return ones == 0 || ones == size();
}

std::string BoolFn::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::uint64_t bits = size();
  const std::size_t digits = bits < 4 ? 1 : bits / 4;
  std::string out(digits, '0');
  for (std::size_t k = 0; k < digits; ++k) {
    const std::uint64_t base = 4 * k;
    out[k] = kDigits[(words_[base >> 6] >> (base & 63)) & 0xF];
  }
  return out;
}

BoolFn BoolFn::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) throw InputError("relabel must preserve arity");
  return BoolFn(std::move(labels), words_, kMaxArity);
}

SubsetMask relevant_variables(const BoolFn& f) {
  const unsigned n = f.arity();
  const auto words = f.words();
  SubsetMask out;
  for (unsigned i = 0; i < n; ++i) {
    bool relevant = false;
    if (i < 6) {
      const unsigned shift = 1u << i;
      for (auto w : words) {
        if ((w & kLowHalf[i]) != ((w >> shift) & kLowHalf[i])) {
          relevant = true;
          break;
        }
      }
    } else {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t block = 0; block < words.size() && !relevant; block += 2 * stride) {
        relevant = !std::equal(words.begin() + block, words.begin() + block + stride,
                               words.begin() + block + stride);
      }
    }
    if (relevant) out.bits |= std::uint64_t{1} << i;
  }
  return out;
}

BoolFn restrict(const BoolFn& f, unsigned i, int sign) {
  if (i >= f.arity()) {
    throw InputError("variable index " + std::to_string(i) + " out of range for arity " + std::to_string(f.arity()));
  }
  if (sign != 1 && sign != -1) throw InputError("restriction value must be +1 or -1");
  auto labels = f.labels();
  labels.erase(labels.begin() + i);
  const std::uint64_t low = (std::uint64_t{1} << i) - 1;
  const std::uint64_t fixed = sign == 1 ? std::uint64_t{1} << i : 0;
  return BoolFn::tabulate(
      std::move(labels),
      [&](std::uint64_t y) { return f.bit((y & low) | ((y & ~low) << 1) | fixed); }, kMaxArity);
}

BoolFn project(const BoolFn& f, SubsetMask keep) {
  keep = keep & SubsetMask::full(f.arity());
  std::vector<std::string> labels;
  for (unsigned i : keep.members()) labels.push_back(f.labels()[i]);
  return BoolFn::tabulate(
      std::move(labels), [&](std::uint64_t y) { return f.bit(deposit_bits(y, keep.bits)); }, kMaxArity);
}

BoolFn prune_irrelevant(const BoolFn& f) {
  const SubsetMask rel = relevant_variables(f);
  if (rel == SubsetMask::full(f.arity())) return f;
  return project(f, rel);
}

}  // namespace bnf
