// SPDX-License-Identifier: Apache-2.0
#include "wallis/quadrature.hpp"

#include "wallis/rational.hpp"
#include "wallis/series_catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace wallis {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTMax = 6.1;  // beyond this both weight and offset underflow
constexpr int kMaxLevelCap = 14;

// One abscissa of the transform x = tanh((pi/2) sinh t), stored as the
// distance 1 - |x| from the nearer endpoint (in unit coordinates) and the
// weight (pi/2) cosh t / cosh^2((pi/2) sinh t). Written with exp(-.) so
// nothing overflows near the truncation point.
struct Node {
  double offset;  // 1 - tanh(y), in (0, 1]
  double weight;
};

Node make_node(double t) {
  const double y = kHalfPi * std::sinh(t);
  const double em = std::exp(-2.0 * y);
  const double sech = 2.0 * std::exp(-y) / (1.0 + em);
  return {2.0 * em / (1.0 + em), kHalfPi * std::cosh(t) * sech * sech};
}

// Level 0 holds t = 1, 2, ...; level L >= 1 holds the odd multiples of 2^-L.
// The center node t = 0 is handled separately.
const std::vector<std::vector<Node>>& node_levels() {
  static const std::vector<std::vector<Node>> levels = [] {
    std::vector<std::vector<Node>> v(kMaxLevelCap + 1);
    for (int j = 1; j <= static_cast<int>(kTMax); ++j) v[0].push_back(make_node(j));
    for (int level = 1; level <= kMaxLevelCap; ++level) {
      const double h = std::ldexp(1.0, -level);
      for (double t = h; t < kTMax; t += 2.0 * h) v[level].push_back(make_node(t));
    }
    return v;
  }();
  return levels;
}

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

double sample(const BoundaryAwareFn& f, double x, double da, double db, std::size_t& evals) {
  ++evals;
  const double v = f(x, da, db);
  if (!std::isfinite(v)) throw NonFiniteSampleError(x, v);
  return v;
}

}  // namespace

NonFiniteSampleError::NonFiniteSampleError(double x, double value)
    : std::runtime_error("non-finite integrand sample at x = " + decimal_string(x)),
      abscissa(x),
      sample(value) {}

QuadratureResult integrate_de(const BoundaryAwareFn& f, double a, double b, double tol,
                              int level_cap) {
  if (!(a < b)) throw std::invalid_argument("integrate_de: requires a < b");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_de: requires tol > 0");
  if (level_cap < 1) level_cap = 1;
  if (level_cap > kMaxLevelCap) level_cap = kMaxLevelCap;

  const auto& levels = node_levels();
  const double r = (b - a) / 2.0;
  const double width = b - a;

  QuadratureResult res;
  KahanSum sum;
  // Center node: t = 0, offset 1, weight pi/2.
  sum.add(kHalfPi * sample(f, a + r, r, width - r, res.evaluations));

  double prev = 0.0;
  for (int level = 0; level <= level_cap; ++level) {
    for (const Node& n : levels[level]) {
      if (n.weight == 0.0) continue;
      const double d = r * n.offset;
      if (d == 0.0) continue;
      const double fl = sample(f, a + d, d, width - d, res.evaluations);
      const double fr = sample(f, b - d, width - d, d, res.evaluations);
      sum.add(n.weight * (fl + fr));
    }
    const double h = std::ldexp(1.0, -level);
    const double estimate = r * h * sum.s;
    if (level >= 1) {
      res.error_estimate = std::abs(estimate - prev);
      res.value = estimate;
      if (res.error_estimate <= tol) {
        res.converged = true;
        return res;
      }
    }
    prev = estimate;
  }
  res.value = prev;
  res.converged = false;
  return res;
}

QuadratureResult integrate_de(const std::function<double(double)>& f, double a, double b,
                              double tol, int level_cap) {
  return integrate_de(
      BoundaryAwareFn([&f](double x, double, double) { return f(x); }), a, b, tol, level_cap);
}

QuadratureResult oracle_integral(std::string_view name, InnerFunction inner, double tol,
                                 int level_cap) {
  const SeriesSpec& spec = catalog_lookup(name);
  // Below this distance from the relevant endpoint, reconstruct 1 - v from
  // the distance itself: 1 - sin(pi/2 - d) = 2 sin^2(d/2). The square can
  // underflow at the outermost nodes (weights ~ 1e-150 there); clamping to
  // the smallest normal double perturbs the integral by far less than any
  // reachable tolerance.
  constexpr double kNear = 0.1;
  const auto one_minus = [&spec](double d) {
    const double s = std::sin(d / 2.0);
    return spec.evaluate_at_one_minus(
        std::max(2.0 * s * s, std::numeric_limits<double>::min()));
  };
  BoundaryAwareFn g;
  if (inner == InnerFunction::sin) {
    g = [&spec, one_minus](double x, double, double db) {
      if (db < kNear) return one_minus(db);
      return spec.evaluate(std::min(std::sin(x), 1.0));
    };
  } else {
    g = [&spec, one_minus](double x, double da, double) {
      if (da < kNear) return one_minus(da);
      return spec.evaluate(std::min(std::cos(x), 1.0));
    };
  }
  return integrate_de(g, 0.0, kHalfPi, tol, level_cap);
}

}  // namespace wallis
