#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lapint {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p/q" or a finite decimal such as "0.5" or "1e-6" into an exact rational.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Decimal rendering rounded half-away-from-zero to `digits` places. Display only.
std::string to_decimal(const Rational& q, unsigned digits);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

int sign(const Rational& q);
int sign(const Integer& z);

/// 1/10^k
Rational pow10_inverse(unsigned k);

}  // namespace lapint
