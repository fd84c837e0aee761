#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bnfourier/boolfn.hpp"
#include "bnfourier/network.hpp"

namespace bnf {

/// A node's own function over its direct regulators (the labels of `fn`).
struct LocalFunction {
  std::string name;
  BoolFn fn;
};

/// Truth tables of every definition over its distinct regulators.
std::vector<LocalFunction> local_functions(const Network& net, unsigned cap = kDefaultArityCap);

struct CollapsedNode {
  std::string name;
  std::vector<std::size_t> inputs;  ///< ascending indices into CollapsedNetwork::inputs
  BoolFn fn;                        ///< over exactly those inputs, all relevant

  bool is_constant() const { return inputs.empty(); }
};

/// Every node re-expressed as a function of the input layer only.
struct CollapsedNetwork {
  std::vector<std::string> inputs;
  std::vector<CollapsedNode> nodes;
  std::vector<std::pair<std::string, bool>> constants;  ///< nodes that reduce to a constant
};

/// Substitutes functions into each other in definition order and prunes
/// irrelevant variables. Throws CapExceeded naming the node whose combined
/// support exceeds `cap`.
CollapsedNetwork collapse(const Network& net, unsigned cap = kDefaultArityCap);

/// Same, from local functions listed in a feed-forward order whose labels
/// name inputs or earlier functions.
CollapsedNetwork collapse(std::vector<std::string> inputs, std::span<const LocalFunction> functions,
                          unsigned cap = kDefaultArityCap);

struct InputPartition {
  std::vector<std::string> effective;
  std::vector<std::string> non_effective;
};

/// Inputs relevant to at least one collapsed node versus the rest.
InputPartition effective_inputs(const CollapsedNetwork& c);

/// Number of collapsed nodes whose relevant set contains the input.
std::size_t out_degree(const CollapsedNetwork& c, std::string_view input);

}  // namespace bnf
