// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wallis/rational.hpp"
#include "wallis/series_catalog.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallis {

/// A Maclaurin coefficient stream, indexed by the full power of x. A finite
/// degree marks finitely supported streams (polynomials), which are summed
/// exactly. A declared parity lets the engine skip probing for the inactive
/// parity; coeff_step, when present, is a_k / a_{k-2} as a small rational.
struct CoefficientStream {
  std::function<BigRational(std::size_t)> coeff;
  std::optional<std::size_t> degree;
  std::optional<Parity> parity;
  std::function<BigRational(std::size_t)> coeff_step;
};

CoefficientStream stream_of(const SeriesSpec& spec);
CoefficientStream stream_from_coefficients(std::vector<BigRational> coeffs);
CoefficientStream monomial_stream(std::size_t power, BigRational scale = BigRational(1));

enum class SummationStrategy { geometric, alternating_accelerated, powerlaw_monotone };

std::string_view strategy_name(SummationStrategy s);

struct EngineOptions {
  std::size_t max_terms = 1'000'000;  // per summed route
  std::size_t classify_terms = 24;    // observation window, >= 16
  std::size_t exact_prefix = 320;     // exact prefix of power-law sums
};

/// Value of the transform: odd_part + even_part * (pi/2), both exact
/// rationals, with a bound on |true integral - rendered()| that covers
/// truncation, any extrapolated tail correction, and rendering rounding.
struct PiLinearValue {
  BigRational odd_part;
  BigRational even_part;
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
  std::string strategy_used;

  double rendered() const;
};

struct SumResult {
  BigRational partial;
  double tail_bound = 0.0;
  std::size_t terms_used = 0;
};

class UnclassifiableSeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when no strategy certifies the requested tolerance within the term
/// budget; carries the best partial result and its (possibly infinite) bound.
class SumBudgetError : public std::runtime_error {
 public:
  SumBudgetError(std::string what, SumResult best);
  SumResult best;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(std::string what, PiLinearValue best);
  PiLinearValue best;
};

using TermStream = std::function<BigRational(std::size_t)>;

/// Pick a summation strategy from observed terms (signs and magnitudes).
/// Requires at least 16 terms. Geometric wins when the trailing ratios,
/// corrected for drift, stay below 0.9; otherwise strictly alternating
/// power-law terms accelerate and one-signed power-law terms get an
/// asymptotic tail estimate. Throws UnclassifiableSeriesError otherwise.
SummationStrategy classify_tail(std::span<const double> terms);

/// Sum an infinite term stream under the given strategy with a certified
/// tail bound <= tol. Hypotheses (sign pattern, ratio or slope behavior) are
/// checked empirically; violations and exhausted budgets raise SumBudgetError.
SumResult sum_series(const TermStream& terms, SummationStrategy strategy, double tol,
                     const EngineOptions& opts = {});

/// Theorem routes: integral over [0, pi/2] of f(sin x) for f given by its
/// coefficient stream. Even streams contribute even_part (the pi/2
/// multiple); odd streams contribute odd_part; mixed streams split at tol/2
/// per route and combine.
PiLinearValue integrate_even(const CoefficientStream& stream, double tol,
                             const EngineOptions& opts = {});
PiLinearValue integrate_odd(const CoefficientStream& stream, double tol,
                            const EngineOptions& opts = {});
PiLinearValue integrate_mixed(const CoefficientStream& stream, double tol,
                              const EngineOptions& opts = {});

}  // namespace wallis
