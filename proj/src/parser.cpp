#include "nonisog/parser.hpp"

#include <cctype>

#include "nonisog/rational.hpp"

namespace nonisog {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool digit_at(std::size_t i) const { return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i])); }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return Polynomial() - unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek('^')) {
      ++pos_;
      base = pow(base, exponent());
    }
    return base;
  }

  unsigned exponent() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      throw ParseError("exponent must be a nonnegative integer", pos_);
    }
    if (!digit_at(pos_)) throw ParseError("expected exponent", pos_);
    Integer e = digits();
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) {
      throw ParseError("exponent must be a nonnegative integer", start);
    }
    if (e > kMaxExponent) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(e.get_ui());
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (digit_at(pos_)) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      Integer num = digits();
      Integer den = 1;
      if (pos_ < s_.size() && s_[pos_] == '.') throw ParseError("decimal literals are not supported", pos_);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (!digit_at(pos_)) throw ParseError("expected denominator", pos_);
        den = digits();
        if (den == 0) throw ParseError("zero denominator", start);
      }
      Polynomial lit = Polynomial::constant(make_rational(num, den));
      if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        Polynomial x = Polynomial::variable();
        if (peek('^')) {
          ++pos_;
          x = pow(x, exponent());
        }
        return lit * x;
      }
      return lit;
    }
    if (c == 'x') {
      ++pos_;
      return Polynomial::variable();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unknown variable '") + c + "', only x is allowed", pos_);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).run(); }

}  // namespace nonisog
