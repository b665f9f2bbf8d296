#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "fermat/errors.hpp"

namespace fermat {

// Exact arithmetic foundation. Every quantity in the library is an Integer
// or a canonical Rational (reduced, positive denominator); no floating
// point anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

// Nonnegative greatest common divisor; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

struct IsqrtResult {
  Integer root;  // floor(sqrt(n))
  bool exact;    // root * root == n
};

// Floor integer square root. n < 0 is a domain error.
IsqrtResult isqrt(const Integer& n);

bool is_perfect_square(const Integer& n);

// Canonical fraction: reduced, positive denominator, sign carried by the
// numerator, 0 stored as 0/1. den == 0 is a domain error.
Rational rational_reduce(const Integer& num, const Integer& den);

// Exact square root of a nonnegative rational. Succeeds iff the reduced
// numerator and denominator are both perfect squares; otherwise throws
// NotASquare carrying the offending value. q < 0 is a domain error.
Rational rational_sqrt(const Rational& q);

// Decimal wire format: optional leading '-', no leading zeros except "0".
std::string to_decimal(const Integer& n);

// Strict parse of the wire format; throws std::invalid_argument otherwise.
Integer parse_decimal(std::string_view text);

// "num/den", denominator always present ("1/1", "-1582/13").
std::string to_fraction(const Rational& q);

}  // namespace fermat
