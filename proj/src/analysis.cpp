#include "bnfourier/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

#include "bnfourier/error.hpp"
#include "bnfourier/measures.hpp"
#include "bnfourier/spectrum.hpp"

namespace bnf {

namespace {

void check_dist(const CollapsedNetwork& c, const ProductDist& d) {
  if (d.arity() != c.inputs.size()) {
    throw InputError("distribution covers " + std::to_string(d.arity()) + " inputs, network has " +
                     std::to_string(c.inputs.size()));
  }
}

}  // namespace

RankingResult determinative_power(const CollapsedNetwork& c, const ProductDist& d) {
  check_dist(c, d);
  RankingResult out;
  out.d_values.assign(c.inputs.size(), 0.0);
  for (const auto& node : c.nodes) {
    if (node.is_constant()) continue;
    const ProductDist local = d.marginal(node.inputs);
    const Spectrum s = transform(node.fn, local);
    for (std::size_t k = 0; k < node.inputs.size(); ++k) {
      const auto j = node.inputs[k];
      out.d_values[j] += mi_from_coefficients(s.mean(), s[SubsetMask::single(static_cast<unsigned>(k))], d.p(j));
    }
  }
  out.tau.resize(c.inputs.size());
  for (std::size_t j = 0; j < out.tau.size(); ++j) out.tau[j] = j;
  // Rank on a 1e-12 grid so values equal up to rounding tie-break by name.
  std::vector<double> key(out.d_values.size());
  for (std::size_t j = 0; j < key.size(); ++j) key[j] = std::round(out.d_values[j] * 1e12);
  std::stable_sort(out.tau.begin(), out.tau.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return c.inputs[a] < c.inputs[b];
  });
  return out;
}

UncertaintyCurve uncertainty_curve(const CollapsedNetwork& c, const ProductDist& d,
                                   const std::vector<std::size_t>& order, std::size_t L) {
  check_dist(c, d);
  std::vector<std::size_t> rank(c.inputs.size(), order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto j = order[r];
    if (j >= c.inputs.size()) throw InputError("order refers to input index " + std::to_string(j) + " out of range");
    if (rank[j] != order.size()) throw InputError("order lists input '" + c.inputs[j] + "' twice");
    rank[j] = r;
  }
  if (L > order.size()) throw InputError("curve length exceeds the ordering length");

  struct NodeState {
    ProductDist local;
    Spectrum spectrum;
    std::uint64_t mask = 0;
    double entropy = 0.0;
  };
  std::vector<NodeState> states;
  states.reserve(c.nodes.size());
  for (const auto& node : c.nodes) {
    if (node.is_constant()) continue;
    NodeState st{d.marginal(node.inputs), Spectrum{}, 0, 0.0};
    st.spectrum = transform(node.fn, st.local);
    st.entropy = cond_entropy_spectral(st.spectrum, st.local, SubsetMask{});
    states.push_back(std::move(st));
  }
  std::vector<std::size_t> node_of_state;
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    if (!c.nodes[k].is_constant()) node_of_state.push_back(k);
  }

  UncertaintyCurve out;
  out.points.reserve(L + 1);
  for (std::size_t l = 0; l <= L; ++l) {
    double total = 0.0;
    for (std::size_t s = 0; s < states.size(); ++s) {
      auto& st = states[s];
      if (l > 0) {
        const auto& inputs = c.nodes[node_of_state[s]].inputs;
        const auto it = std::lower_bound(inputs.begin(), inputs.end(), order[l - 1]);
        if (it != inputs.end() && *it == order[l - 1]) {
          st.mask |= std::uint64_t{1} << (it - inputs.begin());
          st.entropy = cond_entropy_spectral(st.spectrum, st.local, SubsetMask{st.mask});
        }
      }
      total += st.entropy;
    }
    out.points.push_back({l, total});
  }
  return out;
}

std::vector<SensitivityRecord> sensitivity_scatter(const CollapsedNetwork& c, const ProductDist& d) {
  check_dist(c, d);
  std::vector<SensitivityRecord> out;
  out.reserve(c.nodes.size());
  for (const auto& node : c.nodes) {
    SensitivityRecord rec;
    rec.name = node.name;
    rec.in_degree = node.inputs.size();
    if (node.is_constant()) {
      rec.prob_one = node.fn.bit(0) ? 1.0 : 0.0;
      out.push_back(rec);
      continue;
    }
    const ProductDist local = d.marginal(node.inputs);
    const Spectrum s = transform(node.fn, local);
    rec.avg_sensitivity = avg_sensitivity_spectral(s, local, SubsetMask::full(local.arity()));
    rec.prob_one = std::clamp(0.5 * (1.0 + s.mean()), 0.0, 1.0);
    double min_inv_var = 1.0 / local.variance(0);
    for (unsigned i = 1; i < local.arity(); ++i) min_inv_var = std::min(min_inv_var, 1.0 / local.variance(i));
    rec.poincare_lower = 4.0 * rec.prob_one * (1.0 - rec.prob_one) * min_inv_var;
    out.push_back(rec);
  }
  return out;
}

double exact_conditional_entropy(const CollapsedNetwork& c, const ProductDist& d,
                                 const std::vector<std::size_t>& given) {
  check_dist(c, d);
  std::vector<std::size_t> support;
  for (const auto& node : c.nodes) support.insert(support.end(), node.inputs.begin(), node.inputs.end());
  for (auto j : given) {
    if (j >= c.inputs.size()) throw InputError("conditioning input index out of range");
    support.push_back(j);
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.size() > kExactSupportLimit) {
    throw CapExceeded("exact joint entropy needs " + std::to_string(support.size()) + " inputs, limit is " +
                          std::to_string(kExactSupportLimit),
                      support.size(), kExactSupportLimit);
  }
  auto position = [&support](std::size_t j) {
    return static_cast<unsigned>(std::lower_bound(support.begin(), support.end(), j) - support.begin());
  };
  std::uint64_t given_mask = 0;
  for (auto j : given) given_mask |= std::uint64_t{1} << position(j);
  std::vector<std::uint64_t> node_masks;
  for (const auto& node : c.nodes) {
    std::uint64_t m = 0;
    for (auto j : node.inputs) m |= std::uint64_t{1} << position(j);
    node_masks.push_back(m);
  }
  const ProductDist local = d.marginal(support);
  const auto masses = local.point_masses();

  // Joint law of (X_given, Y), keyed by the given assignment then the node states.
  std::map<std::uint64_t, std::map<std::vector<bool>, double>> joint;
  std::vector<bool> y(c.nodes.size());
  for (std::uint64_t x = 0; x < masses.size(); ++x) {
    for (std::size_t k = 0; k < c.nodes.size(); ++k) y[k] = c.nodes[k].fn.bit(extract_bits(x, node_masks[k]));
    joint[x & given_mask][y] += masses[x];
  }
  double h = 0.0;
  for (const auto& [xa, ys] : joint) {
    double pa = 0.0;
    for (const auto& [_, p] : ys) pa += p;
    for (const auto& [_, p] : ys) {
      if (p > 0.0) h -= p * std::log2(p / pa);
    }
  }
  return std::max(h, 0.0);
}

}  // namespace bnf
