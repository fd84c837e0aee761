#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bnfourier/collapse.hpp"
#include "bnfourier/distribution.hpp"

namespace bnf {

/// D(j) = sum over nodes i of MI(f_i(X); X_j), and the inputs sorted by it.
struct RankingResult {
  std::vector<double> d_values;  ///< indexed like CollapsedNetwork::inputs
  std::vector<std::size_t> tau;  ///< input indices, D non-increasing, ties by name
};

/// `d` gives a probability for every input of `c`.
RankingResult determinative_power(const CollapsedNetwork& c, const ProductDist& d);

struct CurvePoint {
  std::size_t l = 0;
  double value = 0.0;
};

/// A(l) = sum_i H(Y_i | X_order[0..l)), for l = 0..L.
struct UncertaintyCurve {
  std::vector<CurvePoint> points;
};

/// `order` is a sequence of distinct input indices, L <= order.size().
UncertaintyCurve uncertainty_curve(const CollapsedNetwork& c, const ProductDist& d,
                                   const std::vector<std::size_t>& order, std::size_t L);

struct SensitivityRecord {
  std::string name;
  std::size_t in_degree = 0;
  double avg_sensitivity = 0.0;
  double prob_one = 0.0;
  double poincare_lower = 0.0;  ///< Var f(X) * min_i sigma_i^{-2}
};

std::vector<SensitivityRecord> sensitivity_scatter(const CollapsedNetwork& c, const ProductDist& d);

/// Largest joint support for exact_conditional_entropy.
inline constexpr std::size_t kExactSupportLimit = 20;

/// H(Y | X_given) for the whole node vector Y by enumerating the joint
/// support. Only for small networks (support <= kExactSupportLimit inputs).
double exact_conditional_entropy(const CollapsedNetwork& c, const ProductDist& d,
                                 const std::vector<std::size_t>& given);

}  // namespace bnf
