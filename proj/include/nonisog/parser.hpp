#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "nonisog/errors.hpp"
#include "nonisog/polynomial.hpp"

namespace nonisog {

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : InvalidInput(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Grammar (whitespace ignored between tokens):
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' digits)?
///   atom  := literal ['x'] | 'x' | '(' expr ')'
///   literal := digits ['/' digits]
/// A literal directly followed by x ("15x", "3/4x^2") multiplies it.
Polynomial parse_polynomial(std::string_view text);

struct PolyExpr {
  std::string source;
  Polynomial polynomial;

  static PolyExpr parse(std::string_view text) { return {std::string(text), parse_polynomial(text)}; }
};

}  // namespace nonisog
