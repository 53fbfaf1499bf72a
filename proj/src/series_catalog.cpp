// SPDX-License-Identifier: Apache-2.0
#include "wallis/series_catalog.hpp"

#include "wallis/number_sequences.hpp"
#include "wallis/wallis_table.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace wallis {

namespace {

BigInt factorial(std::size_t n) {
  BigInt p = 1;
  for (std::size_t i = 2; i <= n; ++i) p *= static_cast<unsigned long>(i);
  return p;
}

BigRational zero() { return BigRational(0); }

}  // namespace

SeriesSpec::SeriesSpec(std::string name, Parity parity, BoundaryClass boundary, CoeffFn coeff,
                       EvalFn eval, EvalFn eval_at_one_minus, CoeffFn coeff_step)
    : name_(std::move(name)),
      parity_(parity),
      boundary_(boundary),
      coeff_(std::move(coeff)),
      eval_(std::move(eval)),
      eval_one_minus_(std::move(eval_at_one_minus)),
      coeff_step_(std::move(coeff_step)) {}

BigRational SeriesSpec::coefficient(std::size_t k) const {
  if (parity_ == Parity::even && k % 2 == 1) return zero();
  if (parity_ == Parity::odd && k % 2 == 0) return zero();
  return coeff_(k);
}

double SeriesSpec::evaluate(double x) const {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error(name_ + ": argument outside [0, 1]");
  if (x == 1.0 && boundary_ == BoundaryClass::diverges_at_1_integrable)
    throw std::domain_error(name_ + ": diverges at 1");
  return eval_(x);
}

double SeriesSpec::evaluate_at_one_minus(double w) const {
  if (!(w >= 0.0 && w <= 1.0))
    throw std::domain_error(name_ + ": argument outside [0, 1]");
  if (eval_one_minus_) return eval_one_minus_(w);
  return evaluate(1.0 - w);
}

namespace {

// Coefficient formulas below are written against the full index k of x^k;
// the callers guarantee the right parity.

std::map<std::string, SeriesSpec, std::less<>> build_catalog() {
  std::map<std::string, SeriesSpec, std::less<>> m;
  auto add = [&m](SeriesSpec spec) { m.emplace(spec.name(), std::move(spec)); };

  add(SeriesSpec(
      "sin", Parity::odd, BoundaryClass::entire,
      [](std::size_t k) {
        BigRational a(1, factorial(k));
        return ((k - 1) / 2) % 2 == 1 ? -a : a;
      },
      [](double x) { return std::sin(x); }, nullptr,
      [](std::size_t k) { return BigRational(-1, BigInt(k) * (k - 1)); }));

  add(SeriesSpec(
      "cos", Parity::even, BoundaryClass::entire,
      [](std::size_t k) {
        BigRational a(1, factorial(k));
        return (k / 2) % 2 == 1 ? -a : a;
      },
      [](double x) { return std::cos(x); }, nullptr,
      [](std::size_t k) { return BigRational(-1, BigInt(k) * (k - 1)); }));

  add(SeriesSpec(
      "sinh", Parity::odd, BoundaryClass::entire,
      [](std::size_t k) { return BigRational(1, factorial(k)); },
      [](double x) { return std::sinh(x); }, nullptr,
      [](std::size_t k) { return BigRational(1, BigInt(k) * (k - 1)); }));

  add(SeriesSpec(
      "cosh", Parity::even, BoundaryClass::entire,
      [](std::size_t k) { return BigRational(1, factorial(k)); },
      [](double x) { return std::cosh(x); }, nullptr,
      [](std::size_t k) { return BigRational(1, BigInt(k) * (k - 1)); }));

  // a_{2k+1} = (2k-1)!! / ((2k)!! (2k+1))
  add(SeriesSpec(
      "arcsin", Parity::odd, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        const std::size_t j = (k - 1) / 2;
        if (j == 0) return BigRational(1);
        return BigRational(double_factorial(2 * j - 1),
                           double_factorial(2 * j) * (2 * j + 1));
      },
      [](double x) { return std::asin(x); }, nullptr,
      [](std::size_t k) {
        const BigInt km2(k - 2);
        return BigRational(km2 * km2, BigInt(k - 1) * k);
      }));

  // x*cot(x) = 1 - sum_{k>=1} 4^k B_k x^{2k} / (2k)!
  add(SeriesSpec(
      "x_cot_x", Parity::even, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        if (k == 0) return BigRational(1);
        const std::size_t j = k / 2;
        return BigRational(-(BigInt(1) << (2 * j))) * bernoulli_positive(j) /
               BigRational(factorial(2 * j));
      },
      [](double x) { return x == 0.0 ? 1.0 : x * std::cos(x) / std::sin(x); }));

  add(SeriesSpec(
      "arctan", Parity::odd, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        BigRational a(1, k);
        return ((k - 1) / 2) % 2 == 1 ? -a : a;
      },
      [](double x) { return std::atan(x); }, nullptr,
      [](std::size_t k) { return BigRational(-BigInt(k - 2), k); }));

  add(SeriesSpec(
      "artanh", Parity::odd, BoundaryClass::diverges_at_1_integrable,
      [](std::size_t k) { return BigRational(1, k); },
      [](double x) { return std::atanh(x); },
      [](double w) { return 0.5 * std::log((2.0 - w) / w); },
      [](std::size_t k) { return BigRational(BigInt(k - 2), k); }));

  // a_{2k+1} = (-1)^k (2k-1)!! / ((2k)!! (2k+1))
  add(SeriesSpec(
      "arsinh", Parity::odd, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        const std::size_t j = (k - 1) / 2;
        if (j == 0) return BigRational(1);
        BigRational a(double_factorial(2 * j - 1), double_factorial(2 * j) * (2 * j + 1));
        return j % 2 == 1 ? -a : a;
      },
      [](double x) { return std::asinh(x); }, nullptr,
      [](std::size_t k) {
        const BigInt km2(k - 2);
        return BigRational(-km2 * km2, BigInt(k - 1) * k);
      }));

  // tan x = sum_{k>=1} 2^{2k} (4^k - 1) B_k x^{2k-1} / (2k)!
  add(SeriesSpec(
      "tan", Parity::odd, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        const std::size_t j = (k + 1) / 2;  // x^{2j-1}
        const BigInt pow4 = BigInt(1) << (2 * j);
        return BigRational(pow4 * (pow4 - 1)) * bernoulli_positive(j) /
               BigRational(factorial(2 * j));
      },
      [](double x) { return std::tan(x); }));

  // x/sin(x) = 1 + 2 sum_{k>=1} (2^{2k-1} - 1) B_k x^{2k} / (2k)!
  add(SeriesSpec(
      "x_over_sin_x", Parity::even, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        if (k == 0) return BigRational(1);
        const std::size_t j = k / 2;
        return BigRational(2 * ((BigInt(1) << (2 * j - 1)) - 1)) * bernoulli_positive(j) /
               BigRational(factorial(2 * j));
      },
      [](double x) { return x == 0.0 ? 1.0 : x / std::sin(x); }));

  // x/sinh(x) = 1 + 2 sum_{k>=1} (-1)^k (2^{2k-1} - 1) B_k x^{2k} / (2k)!
  add(SeriesSpec(
      "x_over_sinh_x", Parity::even, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        if (k == 0) return BigRational(1);
        const std::size_t j = k / 2;
        BigRational a = BigRational(2 * ((BigInt(1) << (2 * j - 1)) - 1)) *
                        bernoulli_positive(j) / BigRational(factorial(2 * j));
        return j % 2 == 1 ? -a : a;
      },
      [](double x) { return x == 0.0 ? 1.0 : x / std::sinh(x); }));

  // sec x = 1 + sum_{k>=1} E_k x^{2k} / (2k)!
  add(SeriesSpec(
      "sec", Parity::even, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        if (k == 0) return BigRational(1);
        const std::size_t j = k / 2;
        return BigRational(euler_positive(j), factorial(2 * j));
      },
      [](double x) { return 1.0 / std::cos(x); }));

  add(SeriesSpec(
      "sech", Parity::even, BoundaryClass::converges_at_1,
      [](std::size_t k) {
        if (k == 0) return BigRational(1);
        const std::size_t j = k / 2;
        BigRational a(euler_positive(j), factorial(2 * j));
        return j % 2 == 1 ? -a : a;
      },
      [](double x) { return 1.0 / std::cosh(x); }));

  return m;
}

const std::map<std::string, SeriesSpec, std::less<>>& catalog() {
  static const auto m = build_catalog();
  return m;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "sin",  "cos",    "sinh",   "cosh", "arcsin",        "x_cot_x",        "arctan",
      "artanh", "arsinh", "tan",  "x_over_sin_x", "x_over_sinh_x", "sec",   "sech"};
  return names;
}

const SeriesSpec& catalog_lookup(std::string_view name) {
  const auto& m = catalog();
  auto it = m.find(name);
  if (it == m.end()) throw UnknownSeriesError(name);
  return it->second;
}

BigRational coefficient(std::string_view name, std::size_t k) {
  return catalog_lookup(name).coefficient(k);
}

double direct_eval(std::string_view name, double x) {
  return catalog_lookup(name).evaluate(x);
}

}  // namespace wallis
