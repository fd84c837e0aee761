#pragma once

#include <random>
#include <string>
#include <vector>

namespace gen {

/// Random feed-forward network text with `depth` layers of definitions.
/// Each node draws 1-4 literals from the inputs and all earlier layers.
inline std::string layered_network(std::mt19937_64& rng, unsigned n_inputs, unsigned n_nodes, unsigned depth) {
  std::vector<std::vector<std::string>> layers(1);
  for (unsigned i = 0; i < n_inputs; ++i) layers[0].push_back("in" + std::to_string(i));
  std::string text = "@inputs";
  for (const auto& name : layers[0]) text += " " + name;
  text += "\n";
  std::vector<std::string> available = layers[0];
  for (unsigned k = 0; k < n_nodes; ++k) {
    const unsigned layer = 1 + k * depth / n_nodes;
    while (layers.size() <= layer) {
      if (layers.size() > 1) {
        for (const auto& name : layers.back()) available.push_back(name);
      }
      layers.emplace_back();
    }
    const std::string name = "n" + std::to_string(k);
    const unsigned arity = 1 + static_cast<unsigned>(rng() % 4);
    std::string expr;
    for (unsigned a = 0; a < arity; ++a) {
      std::string atom = available[rng() % available.size()];
      if (rng() % 3 == 0) atom = "NOT " + atom;
      if (a > 0) expr += rng() % 2 ? " AND " : " OR ";
      if (rng() % 4 == 0 && a + 1 < arity) {
        expr += "(" + atom + " OR " + available[rng() % available.size()] + ")";
      } else {
        expr += atom;
      }
    }
    if (rng() % 15 == 0) expr = rng() % 2 ? "1" : "FALSE";
    text += name + " = " + expr + "\n";
    layers[layer].push_back(name);
  }
  return text;
}

}  // namespace gen
