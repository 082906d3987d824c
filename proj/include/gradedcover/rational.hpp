#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gcover {

// All coefficients in this library are exact rationals; no floating point
// enters any computation.  boost's cpp_rational keeps values in lowest
// terms with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
Integer binomial(int n, int k);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

// Accepts an optional leading '-', a nonempty digit string, and an optional
// "/<digits>" suffix with a nonzero denominator.
bool try_parse_rational(const std::string& s, Rational& out);
Rational parse_rational(const std::string& s);

}  // namespace gcover
