#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bnfourier/boolfn.hpp"
#include "bnfourier/distribution.hpp"
#include "bnfourier/subset.hpp"

namespace bnf {

/// Fourier coefficients f^(S) with respect to the orthonormal product basis
/// of a ProductDist. Entry m holds the coefficient of the set encoded by m.
class Spectrum {
 public:
  Spectrum() : coeffs_(1, 0.0) {}
  Spectrum(unsigned arity, std::vector<double> coeffs);

  unsigned arity() const { return arity_; }
  std::span<const double> coefficients() const { return coeffs_; }

  double operator[](SubsetMask s) const { return coeffs_[s.bits]; }
  double at(std::uint64_t mask) const { return coeffs_[mask]; }

  /// f^(empty set) = E[f(X)].
  double mean() const { return coeffs_[0]; }

  /// Sum of squared coefficients (1 for a Boolean function).
  double weight() const;

  /// Sum of f^(S)^2 over S contained in `a`, empty set included.
  double weight_within(SubsetMask a) const;

 private:
  unsigned arity_ = 0;
  std::vector<double> coeffs_;
};

/// Phi_S(x) = prod_{i in S} (x_i - mu_i) / sigma_i; 1 for the empty set.
double basis_eval(SubsetMask s, std::span<const int> x, const ProductDist& d);

/// Coefficients f^(S) = E[f(X) Phi_S(X)] by an n-stage butterfly, O(n 2^n).
Spectrum transform(const BoolFn& f, const ProductDist& d, unsigned cap = kDefaultArityCap);

/// Evaluates sum_S s(S) Phi_S(x).
double reconstruct(const Spectrum& s, const ProductDist& d, std::span<const int> x);

/// E[f(X) | X_A = x_A] = sum_{S subset of A} f^(S) Phi_S(x_A). `xa` lists the
/// signs of the variables in A in ascending index order.
double conditional_expectation(const Spectrum& s, const ProductDist& d, SubsetMask a, std::span<const int> xa);

/// Conditional expectations for every assignment of A at once, O(|A| 2^|A|).
/// Entry y corresponds to the assignment whose k-th member of A is +1 iff
/// bit k of y is set.
std::vector<double> conditional_expectations(const Spectrum& s, const ProductDist& d, SubsetMask a);

}  // namespace bnf
