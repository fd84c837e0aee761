#include "lexer.hpp"

#include <string>

#include "bnfourier/error.hpp"

namespace bnf::detail {

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t column = column_offset + i + 1;
    if (c == '(') {
      out.push_back({TokenKind::lparen, text.substr(i, 1), column});
      ++i;
    } else if (c == ')') {
      out.push_back({TokenKind::rparen, text.substr(i, 1), column});
      ++i;
    } else if (c == '=' || c == '#') {
      throw ParseError(std::string("unexpected '") + c + "'", line, column);
    } else if (!is_identifier_char(c)) {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && is_identifier_char(text[j])) ++j;
      const auto word = text.substr(i, j - i);
      out.push_back({classify(word), word, column});
      i = j;
    }
  }
  out.push_back({TokenKind::end, std::string_view{}, column_offset + text.size() + 1});
  return out;
}

}  // namespace bnf::detail
