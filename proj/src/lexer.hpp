#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "bnfourier/expr.hpp"

namespace bnf::detail {

enum class TokenKind { identifier, constant_true, constant_false, kw_and, kw_or, kw_not, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

inline bool is_identifier_char(char c) {
  return !(c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v' || c == '(' || c == ')' ||
           c == '=' || c == '#');
}

inline TokenKind classify(std::string_view word) {
  if (word == "AND") return TokenKind::kw_and;
  if (word == "OR") return TokenKind::kw_or;
  if (word == "NOT") return TokenKind::kw_not;
  if (word == "1" || word == "TRUE") return TokenKind::constant_true;
  if (word == "0" || word == "FALSE") return TokenKind::constant_false;
  return TokenKind::identifier;
}

/// Splits one line of expression text; `column_offset` is added to the
/// reported columns so errors point into the enclosing line.
std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column_offset);

Expr parse_expression_at(std::string_view text, std::size_t line, std::size_t column_offset);

}  // namespace bnf::detail
