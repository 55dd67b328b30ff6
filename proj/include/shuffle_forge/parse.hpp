#pragma once

#include "shuffle_forge/shuffle.hpp"

#include <stdexcept>

namespace sf {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& what)
        : std::runtime_error("syntax error at offset " + std::to_string(off) + ": " + what), offset(off) {}
};

// Grammar (whitespace ignored):
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := leaf | comm | '(' expr ')' | '(' scalar ')' '*' factor | atom '*' factor | '-' factor | '1'
//   leaf   := 'e' '(' int ',' int ')'          (trigonometric)
//           | 'y' '(' int ',' int ')'          (rational)
//   comm   := 'comm' ['[' scalar ']'] '(' expr ',' expr ')'
//   scalar := field expression in v (trigonometric) or h (rational) with integer literals
TrigExpr parse_expr(const std::string& text);
YangExpr parse_yang_expr(const std::string& text);
RationalV parse_scalar_v(const std::string& text);
PolyH parse_scalar_h(const std::string& text);

}  // namespace sf
