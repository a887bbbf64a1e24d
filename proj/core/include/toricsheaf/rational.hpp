#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace toricsheaf {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

// Parses "p/q", "-p/q" or a plain integer. Throws InputError on anything else
// (including a zero denominator); no rounding ever happens.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

// Floor and ceiling of an exact rational.
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

}  // namespace toricsheaf
