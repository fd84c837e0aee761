#include "bnfourier/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "bnfourier/error.hpp"

namespace bnf {

namespace {

const double kInvLn4 = 1.0 / std::log(4.0);

// Largest arity for which exact noise sensitivity enumerates 4^n pairs.
constexpr unsigned kExactNoiseArity = 12;

// Binary entropy of a probability computed in floating point, which may
// stray from [0,1] by rounding.
double entropy_of_mass(double q) { return binary_entropy(std::clamp(q, 0.0, 1.0)); }

void check_index(const BoolFn& f, unsigned i) {
  if (i >= f.arity()) {
    throw InputError("variable index " + std::to_string(i) + " out of range for arity " + std::to_string(f.arity()));
  }
}

void check_dist(const BoolFn& f, const ProductDist& d) {
  if (f.arity() != d.arity()) {
    throw InputError("distribution arity " + std::to_string(d.arity()) + " does not match function arity " +
                     std::to_string(f.arity()));
  }
}

void check_mask(SubsetMask a, unsigned arity) {
  if (!a.within(arity)) throw InputError("variable set exceeds arity " + std::to_string(arity));
}

// Sum over x of Pr[x] [f(x) != f(x xor e_i)], given the point masses.
double flip_probability(const BoolFn& f, const std::vector<double>& masses, unsigned i) {
  const std::uint64_t size = f.size();
  const std::uint64_t half = std::uint64_t{1} << i;
  double total = 0.0;
  for (std::uint64_t block = 0; block < size; block += 2 * half) {
    for (std::uint64_t x = block; x < block + half; ++x) {
      if (f.bit(x) != f.bit(x + half)) total += masses[x] + masses[x + half];
    }
  }
  return total;
}

double clamp_mutual_information(double mi) {
  if (mi < -1e-9) throw std::logic_error("mutual information negative beyond rounding: " + std::to_string(mi));
  return std::max(mi, 0.0);
}

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("binary entropy argument " + std::to_string(p) + " outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double psi(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InputError("psi argument " + std::to_string(x) + " outside [0,1]");
  return std::pow(x, kInvLn4) - x;
}

double entropy(const BoolFn& f, const ProductDist& d) {
  check_dist(f, d);
  const auto masses = d.point_masses();
  double p_one = 0.0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    if (f.bit(x)) p_one += masses[x];
  }
  return entropy_of_mass(p_one);
}

double cond_entropy_spectral(const Spectrum& s, const ProductDist& d, SubsetMask a) {
  check_mask(a, s.arity());
  const auto means = conditional_expectations(s, d, a);
  const auto members = a.members();
  std::vector<std::size_t> idx(members.begin(), members.end());
  const auto masses = d.marginal(idx).point_masses();
  double total = 0.0;
  for (std::size_t y = 0; y < means.size(); ++y) total += masses[y] * entropy_of_mass(0.5 * (1.0 + means[y]));
  return total;
}

double cond_entropy(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  check_dist(f, d);
  check_mask(a, f.arity());
  const Spectrum s = transform(f, d);
  return cond_entropy_spectral(s, d, a & relevant_variables(f));
}

double mutual_information(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  check_dist(f, d);
  check_mask(a, f.arity());
  const Spectrum s = transform(f, d);
  const double h = entropy_of_mass(0.5 * (1.0 + s.mean()));
  return clamp_mutual_information(h - cond_entropy_spectral(s, d, a & relevant_variables(f)));
}

double mi_from_coefficients(double mean, double singleton, double p) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("probability must lie strictly inside (0,1)");
  const double mu = 2.0 * p - 1.0;
  const double sigma = 2.0 * std::sqrt(p * (1.0 - p));
  const double hi = 0.5 * (1.0 + mean + singleton * (1.0 - mu) / sigma);
  const double lo = 0.5 * (1.0 + mean + singleton * (-1.0 - mu) / sigma);
  const double cond = p * entropy_of_mass(hi) + (1.0 - p) * entropy_of_mass(lo);
  return clamp_mutual_information(entropy_of_mass(0.5 * (1.0 + mean)) - cond);
}

EntropyBound entropy_bounds(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  check_dist(f, d);
  check_mask(a, f.arity());
  const Spectrum s = transform(f, d);
  EntropyBound out;
  out.lower = std::max(0.0, 1.0 - s.weight_within(a));
  out.upper = std::pow(out.lower, kInvLn4);
  out.exact = cond_entropy_spectral(s, d, a & relevant_variables(f));
  return out;
}

double influence(const BoolFn& f, const ProductDist& d, unsigned i) {
  check_dist(f, d);
  check_index(f, i);
  return flip_probability(f, d.point_masses(), i);
}

double influence_spectral(const Spectrum& s, const ProductDist& d, unsigned i) {
  if (i >= s.arity()) throw InputError("variable index out of range");
  double total = 0.0;
  const std::size_t size = std::size_t{1} << s.arity();
  for (std::size_t m = 0; m < size; ++m) {
    if ((m >> i) & 1u) total += s.at(m) * s.at(m);
  }
  return total / d.variance(i);
}

double avg_sensitivity(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  check_dist(f, d);
  check_mask(a, f.arity());
  const auto masses = d.point_masses();
  double total = 0.0;
  for (unsigned i : a.members()) total += flip_probability(f, masses, i);
  return total;
}

double avg_sensitivity(const BoolFn& f, const ProductDist& d) {
  return avg_sensitivity(f, d, SubsetMask::full(f.arity()));
}

double avg_sensitivity_spectral(const Spectrum& s, const ProductDist& d, SubsetMask a) {
  check_mask(a, s.arity());
  std::vector<double> inv_var(s.arity());
  for (unsigned i = 0; i < s.arity(); ++i) inv_var[i] = 1.0 / d.variance(i);
  const std::size_t size = std::size_t{1} << s.arity();
  double total = 0.0;
  for (std::size_t m = 1; m < size; ++m) {
    double w = 0.0;
    for (std::uint64_t b = m & a.bits; b != 0; b &= b - 1) w += inv_var[std::countr_zero(b)];
    total += s.at(m) * s.at(m) * w;
  }
  return total;
}

InfluenceBound mi_influence_bound_check(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  check_dist(f, d);
  check_mask(a, f.arity());
  if (a.is_empty()) throw InputError("influence bound needs a nonempty variable set");
  const Spectrum s = transform(f, d);
  const double var = std::clamp(1.0 - s.mean() * s.mean(), 0.0, 1.0);
  const double h = entropy_of_mass(0.5 * (1.0 + s.mean()));
  const double mi = clamp_mutual_information(h - cond_entropy_spectral(s, d, a & relevant_variables(f)));
  double min_inv_var = std::numeric_limits<double>::infinity();
  for (unsigned i : a.members()) min_inv_var = std::min(min_inv_var, 1.0 / d.variance(i));
  return {avg_sensitivity(f, d, a), min_inv_var * (mi - psi(var))};
}

InfluenceEntropy influence_entropy_identity(const BoolFn& f, const ProductDist& d, unsigned i) {
  check_dist(f, d);
  check_index(f, i);
  const double rest = cond_entropy(f, d, SubsetMask::full(f.arity()).without(SubsetMask::single(i)));
  return {influence(f, d, i), rest / binary_entropy(d.p(i))};
}

bool independence_test(const Spectrum& s, SubsetMask a, double tol) {
  check_mask(a, s.arity());
  for (std::uint64_t sub = a.bits; sub != 0; sub = (sub - 1) & a.bits) {
    if (std::abs(s.at(sub)) > tol) return false;
  }
  return true;
}

NoiseSensitivity noise_sensitivity(const BoolFn& f, const ProductDist& d, double eps, NoiseMode mode,
                                   NoiseOptions options) {
  check_dist(f, d);
  if (!(eps >= 0.0 && eps <= 0.5)) throw InputError("noise rate " + std::to_string(eps) + " outside [0, 1/2]");
  const unsigned n = f.arity();
  if (mode == NoiseMode::exact) {
    if (n > kExactNoiseArity) {
      throw CapExceeded("exact noise sensitivity supports arity <= " + std::to_string(kExactNoiseArity), n,
                        kExactNoiseArity);
    }
    const auto masses = d.point_masses();
    const std::uint64_t size = f.size();
    std::vector<double> flip_weight(size);
    for (std::uint64_t z = 0; z < size; ++z) {
      const int k = std::popcount(z);
      flip_weight[z] = std::pow(eps, k) * std::pow(1.0 - eps, static_cast<int>(n) - k);
    }
    double total = 0.0;
    for (std::uint64_t x = 0; x < size; ++x) {
      double changed = 0.0;
      for (std::uint64_t z = 1; z < size; ++z) {
        if (f.bit(x) != f.bit(x ^ z)) changed += flip_weight[z];
      }
      total += masses[x] * changed;
    }
    return {total, 0.0};
  }

  if (options.samples == 0) throw InputError("Monte-Carlo noise sensitivity needs at least one sample");
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint64_t changed = 0;
  for (std::uint64_t t = 0; t < options.samples; ++t) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (unit(rng) < d.p(i)) x |= std::uint64_t{1} << i;
      if (unit(rng) < eps) z |= std::uint64_t{1} << i;
    }
    if (f.bit(x) != f.bit(x ^ z)) ++changed;
  }
  const double est = static_cast<double>(changed) / static_cast<double>(options.samples);
  return {est, std::sqrt(est * (1.0 - est) / static_cast<double>(options.samples))};
}

UnatenessProfile unateness(const BoolFn& f) {
  UnatenessProfile out;
  out.polarity.reserve(f.arity());
  for (unsigned i = 0; i < f.arity(); ++i) {
    const BoolFn low = restrict(f, i, -1);
    const BoolFn high = restrict(f, i, +1);
    bool low_le_high = true;
    bool high_le_low = true;
    const auto lw = low.words();
    const auto hw = high.words();
    for (std::size_t w = 0; w < lw.size(); ++w) {
      if (lw[w] & ~hw[w]) low_le_high = false;
      if (hw[w] & ~lw[w]) high_le_low = false;
    }
    Polarity p = Polarity::binate;
    if (low_le_high && high_le_low) {
      p = Polarity::unconstrained;
    } else if (low_le_high) {
      p = Polarity::positive;
    } else if (high_le_low) {
      p = Polarity::negative;
    }
    if (p == Polarity::binate) out.is_unate = false;
    out.polarity.push_back(p);
  }
  return out;
}

std::vector<UnateCoefficient> unate_coefficient_check(const BoolFn& f, const ProductDist& d) {
  check_dist(f, d);
  const auto profile = unateness(f);
  if (!profile.is_unate) throw InputError("function is not unate");
  const Spectrum s = transform(f, d);
  const auto masses = d.point_masses();
  std::vector<UnateCoefficient> out;
  for (unsigned i = 0; i < f.arity(); ++i) {
    const double a = static_cast<double>(static_cast<int>(profile.polarity[i]));
    out.push_back({i, s[SubsetMask::single(i)], a * d.sigma(i) * flip_probability(f, masses, i)});
  }
  return out;
}

}  // namespace bnf
