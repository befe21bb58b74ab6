#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and rationals, plus
// the handful of special number sequences the rest of the library consumes.
//
// Every scalar in this project is a Rational. Rationals are kept normalized
// (denominator > 0, gcd(|num|, den) = 1, zero is 0/1) so equality is plain
// structural equality. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orbgw {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1. The sign sits on the
/// numerator only.
std::string to_string(const Rational& q);

/// Inverse of to_string. Accepts "p" and "p/q" with q > 0; anything else
/// (whitespace, signs on the denominator, empty fields) throws
/// std::invalid_argument.
Rational parse_rational(const std::string& text);

/// n-th Bernoulli number in the convention B_1 = -1/2. Only |B_{2g}| is
/// consumed downstream, so the B_1 sign convention carries no weight; it is
/// fixed here once to avoid confusion. Memoized; safe to call concurrently.
Rational bernoulli(int n);

Integer factorial(int n);

Integer binomial(int n, int k);

/// (Gamma(n + k/3) / Gamma(k/3))^3 for k in {1,2}, as the exact rational
/// product prod_{j=0}^{n-1} ((3j+k)/3)^3. No Gamma function is evaluated
/// numerically anywhere in this library; this product form is the
/// definition.
Rational rising_cubed_ratio(int n, int k);

}  // namespace orbgw
