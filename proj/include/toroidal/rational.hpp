#ifndef TOROIDAL_RATIONAL_HPP
#define TOROIDAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toroidal {

// Arbitrary precision integers and rationals. mpq_class keeps values in
// canonical form (reduced, positive denominator) after every arithmetic
// operation; values built from strings go through parse_rational, which
// canonicalizes explicitly.
using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view num, std::string_view den = "1");
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

} // namespace toroidal

#endif
