// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wallis {

// Exact arithmetic carriers. cpp_rational keeps gcd(num, den) == 1 and
// den > 0 after every operation, which the rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Nearest double to an exact rational. Works when numerator and denominator
/// individually overflow the double range but the quotient does not.
double to_double(const BigRational& q);

/// log2(|q|), usable far outside the double exponent range.
/// Returns -infinity for q == 0.
double log2_abs(const BigRational& q);

/// Exact rational equal to a (finite) double.
BigRational rational_from_double(double x);

/// "p/q", or just "p" when the denominator is 1.
std::string ratio_string(const BigRational& q);

/// Decimal rendering at the given number of significant digits.
std::string decimal_string(double x, int significant_digits = 15);
std::string decimal_string(const BigRational& q, int significant_digits = 15);

}  // namespace wallis
