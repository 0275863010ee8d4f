#include "dunkl/rational.hpp"

#include <cctype>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad integer literal: " + std::string(text));
  }
  return Integer(std::string(text), 10);
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw ZeroVector("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) throw ParseError("zero denominator: " + std::string(text));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  if (k > n) return Integer(0);
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace dunkl
