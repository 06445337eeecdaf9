#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rospave {

// Every quantity that decides a verdict is an exact rational. There is no
// floating point anywhere on a correctness path.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" and decimal literals like "0.25". Whitespace at
// either end is ignored. Throws ParseError on anything else, including a
// zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: lowest terms, "p/q", or just "p" when the denominator is 1.
// parse_rational(format_rational(x)) == x for all x.
std::string format_rational(const Rational& value);

// floor(num/den) as an Integer; works for negative values too.
Integer rational_floor(const Rational& value);

} // namespace rospave
