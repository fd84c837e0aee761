#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bnf {

/// Independent binary inputs with Pr[X_i = +1] = p_i, each strictly in (0,1).
class ProductDist {
 public:
  ProductDist() = default;
  explicit ProductDist(std::vector<double> probs);

  static ProductDist uniform(unsigned arity);
  static ProductDist constant(unsigned arity, double p);

  unsigned arity() const { return static_cast<unsigned>(probs_.size()); }
  std::span<const double> probs() const { return probs_; }

  double p(unsigned i) const { return probs_[i]; }
  double mu(unsigned i) const { return mu_[i]; }
  double sigma(unsigned i) const { return sigma_[i]; }
  double variance(unsigned i) const { return sigma_[i] * sigma_[i]; }

  /// Pr[X_i = sign].
  double prob_of(unsigned i, int sign) const { return sign > 0 ? probs_[i] : 1.0 - probs_[i]; }

  /// (x_i - mu_i) / sigma_i for x_i = sign.
  double basis_factor(unsigned i, int sign) const { return (sign - mu_[i]) / sigma_[i]; }

  /// Pr[X = x] for the point with index bits as in BoolFn.
  double probability(std::uint64_t index) const;

  /// Pr[X = x] for every point, indexed like a truth table.
  std::vector<double> point_masses() const;

  /// Distribution of the sub-vector (X_j for j in indices), in that order.
  ProductDist marginal(std::span<const std::size_t> indices) const;

  friend bool operator==(const ProductDist& a, const ProductDist& b) { return a.probs_ == b.probs_; }

 private:
  std::vector<double> probs_;
  std::vector<double> mu_;
  std::vector<double> sigma_;
};

}  // namespace bnf
