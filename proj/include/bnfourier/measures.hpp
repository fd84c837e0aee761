#pragma once

#include <cstdint>
#include <vector>

#include "bnfourier/boolfn.hpp"
#include "bnfourier/distribution.hpp"
#include "bnfourier/spectrum.hpp"
#include "bnfourier/subset.hpp"

namespace bnf {

/// Default tolerance for treating a Fourier coefficient as zero.
inline constexpr double kIndependenceTol = 1e-9;

// --- entropy -----------------------------------------------------------------

/// h(p) in bits, with h(0) = h(1) = 0.
double binary_entropy(double p);

/// x^{1/ln 4} - x on [0,1]; bounds the gap between entropy and variance.
double psi(double x);

/// H(f(X)) in bits.
double entropy(const BoolFn& f, const ProductDist& d);

/// H(f(X) | X_A), evaluated from the spectrum as the expectation of
/// h((1 + E[f | X_A]) / 2) over the assignments of A ∩ relevant(f).
double cond_entropy(const BoolFn& f, const ProductDist& d, SubsetMask a);

/// Same quantity from a precomputed spectrum; iterates over all of A.
double cond_entropy_spectral(const Spectrum& s, const ProductDist& d, SubsetMask a);

/// MI(f(X); X_A) = H(f(X)) - H(f(X) | X_A), clamped at zero.
double mutual_information(const BoolFn& f, const ProductDist& d, SubsetMask a);

/// MI(f(X); X_i) from f^(empty), f^({i}) and p_i alone.
double mi_from_coefficients(double mean, double singleton, double p);

struct EntropyBound {
  double lower = 0.0;
  double exact = 0.0;
  double upper = 0.0;
};

/// 1 - W <= H(f(X) | X_A) <= (1 - W)^{1/ln 4}, where W is the Fourier weight on
/// subsets of A.
EntropyBound entropy_bounds(const BoolFn& f, const ProductDist& d, SubsetMask a);

// --- perturbation ---------------------------------------------------------------

/// I_i(f) = Pr[f(X) != f(X xor e_i)], by weighted summation over the table.
double influence(const BoolFn& f, const ProductDist& d, unsigned i);

/// I_i(f) = sigma_i^{-2} * sum_{S containing i} f^(S)^2.
double influence_spectral(const Spectrum& s, const ProductDist& d, unsigned i);

/// I_A(f) = sum_{i in A} I_i(f), by weighted summation over the table.
double avg_sensitivity(const BoolFn& f, const ProductDist& d, SubsetMask a);
double avg_sensitivity(const BoolFn& f, const ProductDist& d);

/// I_A(f) = sum_S f^(S)^2 sum_{i in S ∩ A} sigma_i^{-2}.
double avg_sensitivity_spectral(const Spectrum& s, const ProductDist& d, SubsetMask a);

/// Both sides of I_A(f) >= min_{i in A} sigma_i^{-2} (MI(f; X_A) - psi(Var f)).
struct InfluenceBound {
  double lhs = 0.0;
  double rhs = 0.0;
};
InfluenceBound mi_influence_bound_check(const BoolFn& f, const ProductDist& d, SubsetMask a);

/// I_i(f) next to H(f(X) | X_{[n]\{i}}) / H(X_i); the two are equal.
struct InfluenceEntropy {
  double influence = 0.0;
  double ratio = 0.0;
};
InfluenceEntropy influence_entropy_identity(const BoolFn& f, const ProductDist& d, unsigned i);

/// True iff |f^(S)| <= tol for every nonempty S within A, i.e. f(X) is
/// independent of X_A.
bool independence_test(const Spectrum& s, SubsetMask a, double tol = kIndependenceTol);

enum class NoiseMode { exact, monte_carlo };

struct NoiseOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

struct NoiseSensitivity {
  double value = 0.0;
  double std_error = 0.0;  ///< zero in exact mode
};

/// Pr[f(X) != f(Y)] where Y flips each coordinate of X independently with
/// probability eps. Exact mode enumerates 4^n pairs and needs n <= 12.
NoiseSensitivity noise_sensitivity(const BoolFn& f, const ProductDist& d, double eps,
                                   NoiseMode mode = NoiseMode::exact, NoiseOptions options = {});

// --- unate functions -------------------------------------------------------------

enum class Polarity : int {
  negative = -1,
  unconstrained = 0,  ///< irrelevant variable
  positive = 1,
  binate = 2,         ///< relevant, but neither polarity holds
};

struct UnatenessProfile {
  bool is_unate = true;
  std::vector<Polarity> polarity;
};

/// Polarity per variable from comparing the restrictions x_i = -1 and x_i = +1.
UnatenessProfile unateness(const BoolFn& f);

struct UnateCoefficient {
  unsigned variable = 0;
  double coefficient = 0.0;  ///< f^({i})
  double predicted = 0.0;    ///< a_i * sigma_i * I_i(f)
};

/// Per-variable comparison of f^({i}) with a_i sigma_i I_i(f). Throws
/// InputError for a non-unate f.
std::vector<UnateCoefficient> unate_coefficient_check(const BoolFn& f, const ProductDist& d);

}  // namespace bnf
