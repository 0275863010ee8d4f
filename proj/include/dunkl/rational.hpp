#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dunkl {

// Exact arbitrary-precision rational. Iterated Laplacians produce
// factorial-scale integers, so fixed-width arithmetic is not an option.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den, canonicalized. den must be nonzero.
Rational make_rational(long num, long den = 1);

// Accepts "p", "-p" or "p/q" with integer p, q. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

// "p" when den == 1, else "p/q".
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace dunkl
