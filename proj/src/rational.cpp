// SPDX-License-Identifier: Apache-2.0
#include "wallis/rational.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace wallis {

namespace {

// log2 of a positive big integer: shift down to <= 53 bits, then use libm.
double log2_big(const BigInt& v) {
  const auto bits = boost::multiprecision::msb(v);  // index of top set bit
  const unsigned shift = bits > 52 ? static_cast<unsigned>(bits - 52) : 0u;
  const double top = static_cast<double>((v >> shift).convert_to<double>());
  return std::log2(top) + static_cast<double>(shift);
}

}  // namespace

double to_double(const BigRational& q) { return q.convert_to<double>(); }

double log2_abs(const BigRational& q) {
  if (q.is_zero()) return -std::numeric_limits<double>::infinity();
  BigInt n = boost::multiprecision::numerator(q);
  if (n < 0) n = -n;
  return log2_big(n) - log2_big(boost::multiprecision::denominator(q));
}

BigRational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  return BigRational(x);
}

std::string ratio_string(const BigRational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

std::string decimal_string(double x, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
  return buf;
}

std::string decimal_string(const BigRational& q, int significant_digits) {
  return decimal_string(to_double(q), significant_digits);
}

}  // namespace wallis
