#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace noncross {

/// Arbitrary-precision exact rational (GMP backed).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "-p" or "p/q". Throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace noncross
