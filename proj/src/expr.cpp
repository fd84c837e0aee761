#include "bnfourier/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "bnfourier/error.hpp"
#include "lexer.hpp"

namespace bnf {

Expr Expr::variable(std::string name) {
  Expr e;
  e.kind = Kind::variable;
  e.name = std::move(name);
  return e;
}

Expr Expr::constant(bool value) {
  Expr e;
  e.kind = Kind::constant;
  e.value = value;
  return e;
}

Expr Expr::negation(Expr child) {
  Expr e;
  e.kind = Kind::negation;
  e.children.push_back(std::move(child));
  return e;
}

Expr Expr::conjunction(std::vector<Expr> children) {
  if (children.size() < 2) throw InputError("AND needs at least two operands");
  Expr e;
  e.kind = Kind::conjunction;
  e.children = std::move(children);
  return e;
}

Expr Expr::disjunction(std::vector<Expr> children) {
  if (children.size() < 2) throw InputError("OR needs at least two operands");
  Expr e;
  e.kind = Kind::disjunction;
  e.children = std::move(children);
  return e;
}

namespace {

void collect_names(const Expr& e, std::vector<std::string>& out, std::unordered_set<std::string>& seen) {
  if (e.kind == Expr::Kind::variable) {
    if (seen.insert(e.name).second) out.push_back(e.name);
    return;
  }
  for (const auto& c : e.children) collect_names(c, out, seen);
}

void print(const Expr& e, std::string& out) {
  auto child = [&out](const Expr& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (e.kind) {
    case Expr::Kind::variable:
      out += e.name;
      break;
    case Expr::Kind::constant:
      out += e.value ? '1' : '0';
      break;
    case Expr::Kind::negation: {
      const auto k = e.children.front().kind;
      out += "NOT ";
      child(e.children.front(), k == Expr::Kind::conjunction || k == Expr::Kind::disjunction);
      break;
    }
    case Expr::Kind::conjunction:
    case Expr::Kind::disjunction: {
      const bool is_and = e.kind == Expr::Kind::conjunction;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += is_and ? " AND " : " OR ";
        const auto k = e.children[i].kind;
        // Same-operator children came from explicit parentheses; keep them.
        child(e.children[i], k == e.kind || (is_and && k == Expr::Kind::disjunction));
      }
      break;
    }
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column_offset)
      : tokens_(detail::tokenize(text, line, column_offset)), line_(line) {}

  Expr parse_all() {
    Expr e = parse_or();
    if (peek().kind != detail::TokenKind::end) fail("unexpected '" + std::string(peek().text) + "'", peek());
    return e;
  }

 private:
  const detail::Token& peek() const { return tokens_[pos_]; }
  const detail::Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message, const detail::Token& at) const {
    throw ParseError(message, line_, at.column);
  }

  Expr parse_or() {
    std::vector<Expr> terms;
    terms.push_back(parse_and());
    while (peek().kind == detail::TokenKind::kw_or) {
      next();
      terms.push_back(parse_and());
    }
    return terms.size() == 1 ? std::move(terms.front()) : Expr::disjunction(std::move(terms));
  }

  Expr parse_and() {
    std::vector<Expr> terms;
    terms.push_back(parse_not());
    while (peek().kind == detail::TokenKind::kw_and) {
      next();
      terms.push_back(parse_not());
    }
    return terms.size() == 1 ? std::move(terms.front()) : Expr::conjunction(std::move(terms));
  }

  Expr parse_not() {
    if (peek().kind == detail::TokenKind::kw_not) {
      next();
      return Expr::negation(parse_not());
    }
    return parse_atom();
  }

  Expr parse_atom() {
    const auto& tok = next();
    switch (tok.kind) {
      case detail::TokenKind::identifier:
        return Expr::variable(std::string(tok.text));
      case detail::TokenKind::constant_true:
        return Expr::constant(true);
      case detail::TokenKind::constant_false:
        return Expr::constant(false);
      case detail::TokenKind::lparen: {
        Expr inner = parse_or();
        if (peek().kind != detail::TokenKind::rparen) fail("expected ')'", peek());
        next();
        return inner;
      }
      case detail::TokenKind::end:
        fail("unexpected end of expression", tok);
      default:
        fail("unexpected '" + std::string(tok.text) + "'", tok);
    }
  }

  std::vector<detail::Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

// Table of variable j: bit x set iff bit j of x is set.
std::vector<std::uint64_t> projection_words(unsigned j, unsigned arity) {
  static constexpr std::array<std::uint64_t, 6> kHigh = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
  };
  auto words = BoolFn::blank_words(arity, kMaxArity);
  if (j < 6) {
    std::fill(words.begin(), words.end(), kHigh[j]);
  } else {
    const std::size_t stride = std::size_t{1} << (j - 6);
    for (std::size_t w = 0; w < words.size(); ++w) words[w] = (w / stride) % 2 ? ~std::uint64_t{0} : 0;
  }
  if (arity < 6) words[0] &= (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
  return words;
}

std::vector<std::uint64_t> table_words(const Expr& e, const std::unordered_map<std::string, unsigned>& index,
                                       unsigned arity) {
  const std::uint64_t tail = arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << arity)) - 1;
  switch (e.kind) {
    case Expr::Kind::variable: {
      const auto it = index.find(e.name);
      if (it == index.end()) throw InputError("expression references unlisted variable '" + e.name + "'");
      return projection_words(it->second, arity);
    }
    case Expr::Kind::constant: {
      auto words = BoolFn::blank_words(arity, kMaxArity);
      if (e.value) {
        std::fill(words.begin(), words.end(), ~std::uint64_t{0});
        words.back() &= tail;
      }
      return words;
    }
    case Expr::Kind::negation: {
      auto words = table_words(e.children.front(), index, arity);
      for (auto& w : words) w = ~w;
      words.back() &= tail;
      return words;
    }
    case Expr::Kind::conjunction:
    case Expr::Kind::disjunction: {
      auto words = table_words(e.children.front(), index, arity);
      for (std::size_t c = 1; c < e.children.size(); ++c) {
        const auto rhs = table_words(e.children[c], index, arity);
        for (std::size_t w = 0; w < words.size(); ++w) {
          words[w] = e.kind == Expr::Kind::conjunction ? words[w] & rhs[w] : words[w] | rhs[w];
        }
      }
      return words;
    }
  }
  return {};
}

}  // namespace

std::vector<std::string> referenced_names(const Expr& e) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_names(e, out, seen);
  return out;
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

Expr parse_expression(std::string_view text) { return Parser(text, 0, 0).parse_all(); }

namespace detail {

Expr parse_expression_at(std::string_view text, std::size_t line, std::size_t column_offset) {
  return Parser(text, line, column_offset).parse_all();
}

}  // namespace detail

BoolFn truth_table(const Expr& e, std::vector<std::string> vars, unsigned cap) {
  const auto arity = static_cast<unsigned>(vars.size());
  BoolFn::blank_words(arity, cap);  // cap check before any work
  std::unordered_map<std::string, unsigned> index;
  for (unsigned j = 0; j < arity; ++j) index.emplace(vars[j], j);
  auto words = table_words(e, index, arity);
  return BoolFn(std::move(vars), std::move(words), cap);
}

BoolFn truth_table(const Expr& e, unsigned cap) { return truth_table(e, referenced_names(e), cap); }

}  // namespace bnf
