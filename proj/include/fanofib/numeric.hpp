#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fanofib::exactmath {

// Exact arithmetic substrate. Rational values are always stored reduced
// to lowest terms with a positive denominator; Integer is unbounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den as a reduced rational. Throws parameter_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Exact binomial coefficient; 0 when k > n. Both arguments must be >= 0.
Integer binomial(const Integer& n, const Integer& k);

Integer factorial(unsigned n);

// Canonical text: "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);

// Inverse of to_string; accepts optional sign and "p/q". Throws parameter_error.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace fanofib::exactmath
