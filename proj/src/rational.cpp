#include "nonisog/rational.hpp"

#include <cctype>

#include "nonisog/errors.hpp"

namespace nonisog {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

Integer parse_integer(const std::string& s, const std::string& whole) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw InvalidInput("malformed rational: '" + whole + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw InvalidInput("malformed rational: '" + whole + "'");
    }
  }
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  const std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw InvalidInput("malformed rational: '" + text + "'");
  }
  return make_rational(num, parse_integer(den_text, text));
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
  r.canonicalize();
  return r;
}

}  // namespace nonisog
