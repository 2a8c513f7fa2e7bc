#ifndef VORTSYM_RATIONAL_HPP
#define VORTSYM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace vortsym {

// All arithmetic in this project is exact. Scalars are arbitrary-precision
// rationals kept in canonical form: gcd(|num|, den) = 1, den > 0, zero = 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den, normalizing the sign of den. Throws on den == 0.
Rational make_rational(Int num, Int den);

// Accepts "p" or "p/q" with optional leading '-'; normalizes. Throws on
// malformed text or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

}  // namespace vortsym

#endif
