// SPDX-License-Identifier: Apache-2.0
#include "wallis/number_sequences.hpp"

#include "oracle_series.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wallis;

TEST_CASE("positive Bernoulli values match the binomial-recurrence oracle") {
  CHECK(bernoulli_positive(1) == BigRational(1, 6));
  CHECK(bernoulli_positive(2) == BigRational(1, 30));
  CHECK(bernoulli_positive(3) == BigRational(1, 42));
  for (std::size_t k = 1; k <= 15; ++k)
    CHECK(bernoulli_positive(k) == oracle::bernoulli_recurrence_oracle(k));
  CHECK_THROWS_AS(bernoulli_positive(0), std::invalid_argument);
}

TEST_CASE("positive Euler values match the secant-division oracle") {
  CHECK(euler_positive(1) == 1);
  CHECK(euler_positive(2) == 5);
  CHECK(euler_positive(3) == 61);
  for (std::size_t k = 1; k <= 12; ++k)
    CHECK(euler_positive(k) == oracle::euler_secant_oracle(k));
  CHECK_THROWS_AS(euler_positive(0), std::invalid_argument);
}

TEST_CASE("tangent expansion built from B_k reproduces exact series division") {
  // tan x = sum_{k>=1} 2^{2k} (4^k - 1) B_k x^{2k-1} / (2k)!, checked
  // against sin/cos over the truncated rational polynomial ring.
  constexpr std::size_t degree = 21;
  const oracle::Poly tan_ref =
      oracle::div(oracle::sin_series(degree), oracle::cos_series(degree), degree);
  CHECK(tan_ref[1] == BigRational(1));
  CHECK(tan_ref[3] == BigRational(1, 3));
  CHECK(tan_ref[5] == BigRational(2, 15));
  for (std::size_t k = 1; k <= 10; ++k) {
    const BigInt pow4 = BigInt(1) << (2 * k);
    const BigRational from_formula = BigRational(pow4 * (pow4 - 1)) * bernoulli_positive(k) /
                                     BigRational(oracle::factorial(2 * k));
    CHECK(from_formula == tan_ref[2 * k - 1]);
  }
}

TEST_CASE("secant expansion built from E_k reproduces exact series division") {
  constexpr std::size_t degree = 20;
  const oracle::Poly sec_ref = oracle::div(oracle::one(degree), oracle::cos_series(degree), degree);
  CHECK(sec_ref[0] == BigRational(1));
  CHECK(sec_ref[2] == BigRational(1, 2));
  CHECK(sec_ref[4] == BigRational(5, 24));
  for (std::size_t k = 1; k <= 10; ++k)
    CHECK(BigRational(euler_positive(k), oracle::factorial(2 * k)) == sec_ref[2 * k]);
}

TEST_CASE("positivity, growth, and the classical asymptotic") {
  BigRational prev = bernoulli_positive(1);
  CHECK(prev > 0);
  for (std::size_t k = 2; k <= 20; ++k) {
    const BigRational cur = bernoulli_positive(k);
    CHECK(cur > 0);
    if (k >= 4) CHECK(cur > prev);  // growth takes over after the early dip
    prev = cur;
    CHECK(euler_positive(k) > 0);
  }
  // B_k (2pi)^{2k} / (2 (2k)!) -> 1, within 1% by k = 15. Evaluated in logs
  // since both factors overflow a double well before k = 15.
  for (std::size_t k = 15; k <= 20; ++k) {
    const double kd = static_cast<double>(k);
    const double lg = log2_abs(bernoulli_positive(k)) * std::numbers::ln2 +
                      2.0 * kd * std::log(2.0 * std::numbers::pi) - std::log(2.0) -
                      std::lgamma(2.0 * kd + 1.0);
    CHECK(std::abs(std::exp(lg) - 1.0) < 0.01);
  }
}
