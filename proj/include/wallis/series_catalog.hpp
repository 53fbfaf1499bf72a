// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wallis/rational.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wallis {

enum class Parity { even, odd, mixed };

enum class BoundaryClass {
  entire,                    // coefficients decay super-geometrically
  converges_at_1,            // radius > 1, or absolutely convergent at x = 1
  diverges_at_1_integrable,  // direct form blows up at x = 1 (log-type)
};

class UnknownSeriesError : public std::invalid_argument {
 public:
  explicit UnknownSeriesError(std::string_view name)
      : std::invalid_argument("unknown series: " + std::string(name)) {}
};

/// A named function given by its exact Maclaurin coefficients plus a closed
/// form used only for independent checking. Coefficients are total over k;
/// indices of the inactive parity are zero.
class SeriesSpec {
 public:
  using CoeffFn = std::function<BigRational(std::size_t)>;
  using EvalFn = std::function<double(double)>;

  SeriesSpec(std::string name, Parity parity, BoundaryClass boundary, CoeffFn coeff,
             EvalFn eval, EvalFn eval_at_one_minus = nullptr, CoeffFn coeff_step = nullptr);

  const std::string& name() const { return name_; }
  Parity parity() const { return parity_; }
  BoundaryClass boundary() const { return boundary_; }

  /// Exact coefficient of x^k.
  BigRational coefficient(std::size_t k) const;

  /// Closed-form value for x in [0, 1]. Removable singularities at 0 are
  /// filled in; throws std::domain_error outside [0, 1] and at x = 1 for
  /// diverges_at_1_integrable entries.
  double evaluate(double x) const;

  /// f(1 - w) for small w >= 0, without cancellation in 1 - w. Entries that
  /// are singular at 1 use a dedicated form; w = 0 throws for those.
  double evaluate_at_one_minus(double w) const;

  /// a_k / a_{k-2} as a small exact rational, when the entry provides it
  /// (used to walk coefficients of the active parity cheaply). May be null.
  const CoeffFn& coefficient_step() const { return coeff_step_; }

 private:
  std::string name_;
  Parity parity_;
  BoundaryClass boundary_;
  CoeffFn coeff_;
  EvalFn eval_;
  EvalFn eval_one_minus_;
  CoeffFn coeff_step_;
};

/// The registered entries, in catalog order.
const std::vector<std::string>& catalog_names();

/// Lookup by identifier; throws UnknownSeriesError.
const SeriesSpec& catalog_lookup(std::string_view name);

/// Convenience forms of the two spec lookups above.
BigRational coefficient(std::string_view name, std::size_t k);
double direct_eval(std::string_view name, double x);

}  // namespace wallis
