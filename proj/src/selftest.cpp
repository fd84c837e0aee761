#include "bnfourier/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bnfourier/baseline.hpp"
#include "bnfourier/measures.hpp"
#include "bnfourier/spectrum.hpp"

namespace bnf {

namespace {

struct Instance {
  BoolFn f;
  ProductDist d;
  SubsetMask a;
};

ProductDist random_dist(unsigned n, Rng& rng) {
  std::uniform_real_distribution<double> p(0.1, 0.9);
  std::vector<double> probs(n);
  for (auto& v : probs) v = p(rng);
  return ProductDist(std::move(probs));
}

Instance random_instance(unsigned max_arity, Rng& rng) {
  std::uniform_int_distribution<unsigned> arity(1, max_arity);
  const unsigned n = arity(rng);
  BoolFn f = sample_random_function(n, rng);
  // Mix in sparse-support functions so that irrelevant variables and
  // independence cases actually occur.
  if (rng() % 3 == 0) {
    const unsigned k = static_cast<unsigned>(rng() % (n + 1));
    const BoolFn g = sample_random_function(k, rng);
    f = BoolFn::tabulate(default_labels(n), [&](std::uint64_t x) { return g.bit(x & ((std::uint64_t{1} << k) - 1)); });
  }
  const SubsetMask a{rng() & SubsetMask::full(n).bits};
  return {std::move(f), random_dist(n, rng), a};
}

BoolFn random_threshold(unsigned n, Rng& rng) {
  std::uniform_int_distribution<int> weight(-5, 5);
  std::vector<int> w(n);
  int total = 0;
  for (auto& v : w) {
    v = weight(rng);
    total += std::abs(v);
  }
  std::uniform_int_distribution<int> threshold(-total, total);
  const int t = threshold(rng);
  return BoolFn::tabulate(default_labels(n), [&](std::uint64_t x) {
    int s = 0;
    for (unsigned i = 0; i < n; ++i) s += ((x >> i) & 1u) ? w[i] : -w[i];
    return s >= t;
  });
}

// Pr[X_A = x_A] and Pr[X_A = x_A, f = 1] for every assignment of A, straight
// from the truth table.
struct Slices {
  std::vector<double> mass;
  std::vector<double> ones;
};

Slices slices(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  Slices s{std::vector<double>(std::size_t{1} << a.size(), 0.0), std::vector<double>(std::size_t{1} << a.size(), 0.0)};
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const double p = d.probability(x);
    const auto y = extract_bits(x, a.bits);
    s.mass[y] += p;
    if (f.bit(x)) s.ones[y] += p;
  }
  return s;
}

double direct_cond_entropy(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  const auto s = slices(f, d, a);
  double h = 0.0;
  for (std::size_t y = 0; y < s.mass.size(); ++y) h += s.mass[y] * binary_entropy(std::clamp(s.ones[y] / s.mass[y], 0.0, 1.0));
  return h;
}

bool direct_independent(const BoolFn& f, const ProductDist& d, SubsetMask a) {
  const auto s = slices(f, d, a);
  double p_one = 0.0;
  for (double v : s.ones) p_one += v;
  for (std::size_t y = 0; y < s.mass.size(); ++y) {
    if (std::abs(s.ones[y] - s.mass[y] * p_one) > 1e-10) return false;
  }
  return true;
}

void record(IdentityCheck& c, double error, bool ok) {
  ++c.instances;
  c.max_error = std::max(c.max_error, error);
  if (!ok) ++c.failures;
}

}  // namespace

std::vector<IdentityCheck> run_selftest(const SelftestOptions& options) {
  IdentityCheck parseval{"parseval"};
  IdentityCheck cond_mean{"conditional-mean-expansion"};
  IdentityCheck cond_entropy_check{"spectral-conditional-entropy"};
  IdentityCheck sandwich{"entropy-sandwich"};
  IdentityCheck mi_bound{"influence-mi-bound"};
  IdentityCheck ratio{"influence-entropy-ratio"};
  IdentityCheck independence{"independence-criterion"};
  IdentityCheck chain{"single-variable-mi-chain-bound"};
  IdentityCheck unate_coeff{"unate-singleton-coefficient"};
  IdentityCheck unate_dependence{"unate-relevant-dependence"};

  Rng rng(options.seed);
  for (std::size_t t = 0; t < options.instances; ++t) {
    const auto [f, d, a] = random_instance(options.max_arity, rng);
    const unsigned n = f.arity();
    const Spectrum s = transform(f, d);

    const double w = std::abs(s.weight() - 1.0);
    record(parseval, w, w <= 1e-9);

    {
      const auto sl = slices(f, d, a);
      const auto spectral = conditional_expectations(s, d, a);
      double err = 0.0;
      for (std::size_t y = 0; y < spectral.size(); ++y) {
        err = std::max(err, std::abs(spectral[y] - (2.0 * sl.ones[y] - sl.mass[y]) / sl.mass[y]));
      }
      record(cond_mean, err, err <= 1e-9);
    }

    const double exact = cond_entropy(f, d, a);
    const double direct = direct_cond_entropy(f, d, a);
    record(cond_entropy_check, std::abs(exact - direct), std::abs(exact - direct) <= 1e-9);

    const auto bounds = entropy_bounds(f, d, a);
    const double viol = std::max({0.0, bounds.lower - bounds.exact, bounds.exact - bounds.upper});
    record(sandwich, viol, viol <= 1e-12);

    if (!a.is_empty()) {
      const auto b = mi_influence_bound_check(f, d, a);
      const double v = std::max(0.0, b.rhs - b.lhs);
      record(mi_bound, v, v <= 1e-12);
    }

    const unsigned i = static_cast<unsigned>(rng() % n);
    const auto r = influence_entropy_identity(f, d, i);
    record(ratio, std::abs(r.influence - r.ratio), std::abs(r.influence - r.ratio) <= 1e-9);

    const bool spectral_indep = independence_test(s, a, kIndependenceTol);
    record(independence, 0.0, spectral_indep == direct_independent(f, d, a));

    double sum_single = 0.0;
    for (unsigned j = 0; j < n; ++j) sum_single += mutual_information(f, d, SubsetMask::single(j));
    const double total = mutual_information(f, d, SubsetMask::full(n));
    const double cv = std::max({0.0, sum_single - total, total - 1.0});
    record(chain, cv, cv <= 1e-9);

    const BoolFn g = random_threshold(n, rng);
    const ProductDist dg = random_dist(n, rng);
    double err = 0.0;
    for (const auto& row : unate_coefficient_check(g, dg)) err = std::max(err, std::abs(row.coefficient - row.predicted));
    record(unate_coeff, err, err <= 1e-9);
    const SubsetMask rel = relevant_variables(g);
    bool dependent = true;
    for (unsigned j = 0; j < n; ++j) {
      const double mi = mutual_information(g, dg, SubsetMask::single(j));
      if (rel.contains(j) ? !(mi > 1e-12) : mi > 1e-12) dependent = false;
    }
    record(unate_dependence, 0.0, dependent);
  }
  return {parseval, cond_mean, cond_entropy_check, sandwich, mi_bound, ratio, independence, chain, unate_coeff,
          unate_dependence};
}

}  // namespace bnf
