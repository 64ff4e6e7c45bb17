#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orderpoly {

// GMP keeps mpq_class values canonical (reduced, positive denominator)
// after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", always with an explicit denominator.
std::string to_fraction_string(const Rational& q);

// "num" for integers, "num/den" otherwise.
std::string to_display_string(const Rational& q);

// Accepts "a", "-a" and "a/b"; throws std::invalid_argument otherwise
// (including a zero denominator).
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

} // namespace orderpoly
