// SPDX-License-Identifier: Apache-2.0
#include "wallis/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wallis;

namespace {

bool canonical(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den <= 0) return false;
  BigInt a = num < 0 ? BigInt(-num) : num;
  return num == 0 ? den == 1 : boost::multiprecision::gcd(a, den) == 1;
}

}  // namespace

TEST_CASE("rationals stay canonical through arithmetic") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> num_dist(-500, 500);
  std::uniform_int_distribution<long> den_dist(1, 500);  // construction wants den > 0
  for (int i = 0; i < 500; ++i) {
    const BigRational a(num_dist(rng), den_dist(rng));
    const BigRational b(num_dist(rng), den_dist(rng));
    CHECK(canonical(a));
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (!b.is_zero()) CHECK(canonical(a / b));
  }
}

TEST_CASE("to_double handles magnitudes past the double range") {
  const BigInt big = boost::multiprecision::pow(BigInt(7), 500);
  const BigRational q(big * 2 + 1, big * 3);
  CHECK(to_double(q) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(to_double(BigRational(1, 3)) == doctest::Approx(1.0 / 3.0));
  CHECK(to_double(BigRational(0)) == 0.0);
}

TEST_CASE("log2_abs tracks the exact exponent") {
  CHECK(log2_abs(BigRational(8)) == doctest::Approx(3.0));
  CHECK(log2_abs(BigRational(1, 1024)) == doctest::Approx(-10.0));
  CHECK(log2_abs(BigRational(-3, 4)) == doctest::Approx(std::log2(0.75)));
  CHECK(std::isinf(log2_abs(BigRational(0))));
  // Far outside the double exponent range.
  const BigInt big = boost::multiprecision::pow(BigInt(2), 5000);
  CHECK(log2_abs(BigRational(big, 3)) == doctest::Approx(5000.0 - std::log2(3.0)));
  CHECK(log2_abs(BigRational(3, big)) == doctest::Approx(std::log2(3.0) - 5000.0));
}

TEST_CASE("rational_from_double is exact") {
  for (double x : {0.1, -0.75, 1.0 / 3.0, 6.02e23, -5e-324}) {
    const BigRational q = rational_from_double(x);
    CHECK(to_double(q) == x);
    CHECK(canonical(q));
  }
  CHECK_THROWS_AS(rational_from_double(std::nan("")), std::invalid_argument);
}

TEST_CASE("formatting") {
  CHECK(ratio_string(BigRational(2, 3)) == "2/3");
  CHECK(ratio_string(BigRational(-1, 2)) == "-1/2");
  CHECK(ratio_string(BigRational(7)) == "7");
  CHECK(decimal_string(BigRational(2, 3)) == "0.666666666666667");
  CHECK(decimal_string(0.5, 3) == "0.5");
}
