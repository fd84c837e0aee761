#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bnfourier/boolfn.hpp"
#include "bnfourier/subset.hpp"

namespace bnf {

/// Expression AST of the network language.
struct Expr {
  enum class Kind { variable, constant, negation, conjunction, disjunction };

  Kind kind = Kind::constant;
  std::string name;  // variable
  bool value = false;  // constant; true is +1
  std::vector<Expr> children;

  static Expr variable(std::string name);
  static Expr constant(bool value);
  static Expr negation(Expr child);
  static Expr conjunction(std::vector<Expr> children);
  static Expr disjunction(std::vector<Expr> children);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Distinct variable names in order of first appearance.
std::vector<std::string> referenced_names(const Expr& e);

/// Text form with the minimal parentheses needed to parse back to `e`.
std::string to_string(const Expr& e);

/// Evaluates with `lookup(name)` giving each variable's truth value.
template <class Lookup>
bool evaluate(const Expr& e, Lookup&& lookup) {
  switch (e.kind) {
    case Expr::Kind::variable:
      return lookup(e.name);
    case Expr::Kind::constant:
      return e.value;
    case Expr::Kind::negation:
      return !evaluate(e.children.front(), lookup);
    case Expr::Kind::conjunction:
      for (const auto& c : e.children) {
        if (!evaluate(c, lookup)) return false;
      }
      return true;
    case Expr::Kind::disjunction:
      for (const auto& c : e.children) {
        if (evaluate(c, lookup)) return true;
      }
      return false;
  }
  return false;
}

/// Parses a single expression. Operators are NOT, AND, OR in decreasing
/// precedence; 0/1/FALSE/TRUE are constants; identifiers are runs of
/// characters other than whitespace and "()=#".
Expr parse_expression(std::string_view text);

/// Truth table of `e` over `vars` (every referenced name must be listed).
BoolFn truth_table(const Expr& e, std::vector<std::string> vars, unsigned cap = kDefaultArityCap);

/// Truth table over the referenced names in first-appearance order.
BoolFn truth_table(const Expr& e, unsigned cap = kDefaultArityCap);

}  // namespace bnf
