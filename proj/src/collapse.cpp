#include "bnfourier/collapse.hpp"

#include <algorithm>
#include <unordered_map>

#include "bnfourier/error.hpp"
#include "bnfourier/expr.hpp"

namespace bnf {

std::vector<LocalFunction> local_functions(const Network& net, unsigned cap) {
  std::vector<LocalFunction> out;
  out.reserve(net.definitions().size());
  for (std::size_t k = 0; k < net.definitions().size(); ++k) {
    const auto& def = net.definitions()[k];
    const auto& regs = net.regulators(k);
    if (regs.size() > cap) {
      throw CapExceeded("node '" + def.name + "' has " + std::to_string(regs.size()) +
                            " regulators, above the arity cap of " + std::to_string(cap),
                        regs.size(), cap);
    }
    out.push_back({def.name, truth_table(def.expr, regs, cap)});
  }
  return out;
}

CollapsedNetwork collapse(std::vector<std::string> inputs, std::span<const LocalFunction> functions, unsigned cap) {
  CollapsedNetwork out;
  out.inputs = std::move(inputs);

  // Reference target: either input j or collapsed node k.
  struct Ref {
    bool is_input;
    std::size_t index;
  };
  std::unordered_map<std::string, Ref> refs;
  for (std::size_t j = 0; j < out.inputs.size(); ++j) {
    if (!refs.emplace(out.inputs[j], Ref{true, j}).second) throw InputError("duplicate input '" + out.inputs[j] + "'");
  }

  out.nodes.reserve(functions.size());
  for (const auto& local : functions) {
    const auto& regs = local.fn.labels();
    std::vector<Ref> targets;
    std::vector<std::size_t> support;
    for (const auto& r : regs) {
      const auto it = refs.find(r);
      if (it == refs.end()) {
        throw InputError("node '" + local.name + "' references '" + r + "' before it is defined");
      }
      targets.push_back(it->second);
      if (it->second.is_input) {
        support.push_back(it->second.index);
      } else {
        const auto& sub = out.nodes[it->second.index].inputs;
        support.insert(support.end(), sub.begin(), sub.end());
      }
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (support.size() > cap) {
      throw CapExceeded("node '" + local.name + "' depends on " + std::to_string(support.size()) +
                            " inputs, above the arity cap of " + std::to_string(cap),
                        support.size(), cap);
    }

    // Position of each regulator's own inputs inside `support`, as a mask.
    auto position = [&support](std::size_t input) {
      return static_cast<unsigned>(std::lower_bound(support.begin(), support.end(), input) - support.begin());
    };
    std::vector<std::uint64_t> masks;
    masks.reserve(targets.size());
    for (const auto& t : targets) {
      std::uint64_t m = 0;
      if (t.is_input) {
        m = std::uint64_t{1} << position(t.index);
      } else {
        for (auto j : out.nodes[t.index].inputs) m |= std::uint64_t{1} << position(j);
      }
      masks.push_back(m);
    }

    std::vector<std::string> labels;
    labels.reserve(support.size());
    for (auto j : support) labels.push_back(out.inputs[j]);
    const BoolFn full = BoolFn::tabulate(
        std::move(labels),
        [&](std::uint64_t x) {
          std::uint64_t y = 0;
          for (std::size_t r = 0; r < targets.size(); ++r) {
            const bool v = targets[r].is_input ? ((x & masks[r]) != 0)
                                               : out.nodes[targets[r].index].fn.bit(extract_bits(x, masks[r]));
            if (v) y |= std::uint64_t{1} << r;
          }
          return local.fn.bit(y);
        },
        cap);

    const SubsetMask rel = relevant_variables(full);
    CollapsedNode node;
    node.name = local.name;
    for (unsigned p : rel.members()) node.inputs.push_back(support[p]);
    node.fn = rel == SubsetMask::full(full.arity()) ? full : project(full, rel);
    if (node.is_constant()) out.constants.emplace_back(node.name, node.fn.bit(0));
    if (!refs.emplace(node.name, Ref{false, out.nodes.size()}).second) {
      throw InputError("duplicate node '" + node.name + "'");
    }
    out.nodes.push_back(std::move(node));
  }
  return out;
}

CollapsedNetwork collapse(const Network& net, unsigned cap) {
  const auto locals = local_functions(net, cap);
  return collapse(net.inputs(), locals, cap);
}

InputPartition effective_inputs(const CollapsedNetwork& c) {
  std::vector<bool> used(c.inputs.size(), false);
  for (const auto& node : c.nodes) {
    for (auto j : node.inputs) used[j] = true;
  }
  InputPartition out;
  for (std::size_t j = 0; j < c.inputs.size(); ++j) (used[j] ? out.effective : out.non_effective).push_back(c.inputs[j]);
  return out;
}

std::size_t out_degree(const CollapsedNetwork& c, std::string_view input) {
  const auto it = std::find(c.inputs.begin(), c.inputs.end(), input);
  if (it == c.inputs.end()) throw InputError("unknown input '" + std::string(input) + "'");
  const auto j = static_cast<std::size_t>(it - c.inputs.begin());
  std::size_t count = 0;
  for (const auto& node : c.nodes) {
    if (std::binary_search(node.inputs.begin(), node.inputs.end(), j)) ++count;
  }
  return count;
}

}  // namespace bnf
