#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "bnfourier/analysis.hpp"
#include "bnfourier/boolfn.hpp"
#include "bnfourier/network.hpp"

namespace bnf {

using Rng = std::mt19937_64;

/// Largest in-degree for which unate sampling is exactly uniform.
inline constexpr unsigned kExactUnateArity = 4;

/// Uniform over all 2^(2^k) functions of k variables.
BoolFn sample_random_function(unsigned k, Rng& rng, unsigned cap = kDefaultArityCap);
BoolFn sample_random_function(unsigned k, std::uint64_t seed, unsigned cap = kDefaultArityCap);

/// All unate functions of k <= kExactUnateArity variables, in table order.
const std::vector<BoolFn>& unate_functions(unsigned k);

struct UnateSamplerOptions {
  /// Monotone-chain steps per table entry for k > kExactUnateArity.
  unsigned burn_in_per_point = 64;
  unsigned cap = kDefaultArityCap;
};

/// A unate function of k variables. Exactly uniform for k <= 4. Above that,
/// a uniform polarity vector is applied to a monotone function drawn by a
/// single-flip Markov chain, which is only approximately uniform.
BoolFn sample_random_unate(unsigned k, Rng& rng, UnateSamplerOptions options = {});
BoolFn sample_random_unate(unsigned k, std::uint64_t seed, UnateSamplerOptions options = {});

enum class BaselineMode { exchange_random, exchange_unate, random_topology_random, random_topology_unate };

std::string_view to_string(BaselineMode mode);
BaselineMode parse_baseline_mode(std::string_view text);

struct BaselineSpec {
  BaselineMode mode = BaselineMode::exchange_random;
  std::size_t trials = 25;
  std::uint64_t seed = 0;
  unsigned out_degree = 8;  ///< random-topology modes
  unsigned cap = kDefaultArityCap;
  unsigned threads = 1;
  UnateSamplerOptions unate = {};
};

struct BaselineResult {
  UncertaintyCurve mean;
  std::vector<double> stddev;           ///< sample standard deviation per l
  std::vector<UncertaintyCurve> trials;
  std::size_t resampled = 0;            ///< trials redrawn after a cap overflow
  bool unate_exact = true;              ///< no approximate unate draws were needed
};

/// Mean and spread of A(l) over randomized versions of `net`, each trial
/// ranked by its own determinative power. `d` covers net.inputs().
BaselineResult baseline_curves(const Network& net, const BaselineSpec& spec, const ProductDist& d, std::size_t L);

/// Deterministic per-stream seed derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t attempt = 0);

}  // namespace bnf
