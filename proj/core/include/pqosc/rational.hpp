#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <utility>

namespace pqosc {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// base^e with integer e; negative exponents invert (base must be nonzero).
Rational rational_pow(const Rational& base, long e);

// Parses "3", "-7/10", "0.7", "1.5e-1" into an exact rational.
Rational parse_rational(const std::string& text);

// Writes sqrt(s) as c*sqrt(m), s >= 0. m is a positive integer with small
// square factors and exact squares removed; identical inputs always produce
// the identical (c, m) pair, which is what bucketed radical sums rely on.
std::pair<Rational, Rational> canonical_sqrt(const Rational& s);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace pqosc
