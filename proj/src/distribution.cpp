#include "bnfourier/distribution.hpp"

#include <cmath>
#include <string>

#include "bnfourier/error.hpp"
#include "bnfourier/subset.hpp"

namespace bnf {

ProductDist::ProductDist(std::vector<double> probs) : probs_(std::move(probs)) {
  mu_.reserve(probs_.size());
  sigma_.reserve(probs_.size());
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const double p = probs_[i];
    if (!(p > 0.0 && p < 1.0)) {
      throw InputError("probability p_" + std::to_string(i + 1) + " = " + std::to_string(p) +
                       " must lie strictly inside (0,1)");
    }
    mu_.push_back(2.0 * p - 1.0);
    sigma_.push_back(2.0 * std::sqrt(p * (1.0 - p)));
  }
}

ProductDist ProductDist::uniform(unsigned arity) { return constant(arity, 0.5); }

ProductDist ProductDist::constant(unsigned arity, double p) {
  return ProductDist(std::vector<double>(arity, p));
}

double ProductDist::probability(std::uint64_t index) const {
  double out = 1.0;
  for (unsigned i = 0; i < arity(); ++i) out *= ((index >> i) & 1u) ? probs_[i] : 1.0 - probs_[i];
  return out;
}

std::vector<double> ProductDist::point_masses() const {
  if (arity() > kMaxArity) throw InputError("distribution arity too large to tabulate");
  std::vector<double> out(std::size_t{1} << arity());
  out[0] = 1.0;
  for (unsigned i = 0; i < arity(); ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t x = 0; x < half; ++x) {
      out[x + half] = out[x] * probs_[i];
      out[x] *= 1.0 - probs_[i];
    }
  }
  return out;
}

ProductDist ProductDist::marginal(std::span<const std::size_t> indices) const {
  std::vector<double> probs;
  probs.reserve(indices.size());
  for (auto j : indices) {
    if (j >= probs_.size()) throw InputError("marginal index " + std::to_string(j) + " out of range");
    probs.push_back(probs_[j]);
  }
  return ProductDist(std::move(probs));
}

}  // namespace bnf
