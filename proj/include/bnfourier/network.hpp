#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bnfourier/expr.hpp"

namespace bnf {

struct Definition {
  std::string name;
  Expr expr;
  std::size_t line = 0;  ///< source line, 0 when built programmatically

  friend bool operator==(const Definition& a, const Definition& b) {
    return a.name == b.name && a.expr == b.expr;
  }
};

/// A feed-forward Boolean network: named inputs plus definitions `name = expr`.
///
/// Inputs are the referenced names that are never defined; `pinned_inputs`
/// fixes the order of (and may add unreferenced) inputs, the rest follow in
/// order of first reference. Definitions are stored in a topological order
/// that keeps the given order wherever it is already feed-forward.
class Network {
 public:
  Network() = default;
  Network(std::vector<std::string> pinned_inputs, std::vector<Definition> definitions);

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<Definition>& definitions() const { return defs_; }

  bool is_input(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::optional<std::size_t> input_index(std::string_view name) const;
  std::optional<std::size_t> definition_index(std::string_view name) const;

  /// Distinct names referenced by definition k, first appearance first.
  const std::vector<std::string>& regulators(std::size_t k) const { return regulators_[k]; }

  /// Number of distinct (source, target) references.
  std::size_t edge_count() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.inputs_ == b.inputs_ && a.defs_ == b.defs_;
  }

 private:
  struct Entry {
    bool is_input;
    std::size_t index;
  };

  std::vector<std::string> inputs_;
  std::vector<Definition> defs_;
  std::vector<std::vector<std::string>> regulators_;
  std::unordered_map<std::string, Entry> names_;
};

/// Parses network DSL text: one `name = expr` per line, `#` comments, and an
/// optional `@inputs name...` line.
Network parse_network(std::string_view text);

Network load_network(const std::filesystem::path& path);

/// DSL text that parses back to an equal Network.
std::string print_network(const Network& net);

/// Number of definitions that reference `name`, each counted once.
std::size_t out_degree(const Network& net, std::string_view name);

/// Node values for one input assignment (true is +1), computed in a single
/// pass over the definitions. `inputs[j]` is the value of inputs()[j].
std::vector<bool> evaluate_network(const Network& net, const std::vector<bool>& inputs);

}  // namespace bnf
