// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wallis {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // last inter-level difference; reported, not proven
  std::size_t evaluations = 0;
  bool converged = false;
};

class NonFiniteSampleError : public std::runtime_error {
 public:
  NonFiniteSampleError(double x, double value);
  double abscissa;
  double sample;
};

/// Integrand for the open rule. Called as f(x, dist_a, dist_b) where dist_a
/// and dist_b are the distances to the interval endpoints, computed without
/// cancellation; x itself may round to an endpoint at extreme nodes, the
/// distances never do.
using BoundaryAwareFn = std::function<double(double x, double dist_a, double dist_b)>;

/// Double-exponential (tanh-sinh) quadrature over (a, b). Levels double the
/// node density until two successive levels agree within tol or level_cap is
/// reached. Endpoints are never sampled, so integrable endpoint
/// singularities are fine. Throws NonFiniteSampleError if the integrand
/// returns NaN/inf at a node that carries weight.
QuadratureResult integrate_de(const BoundaryAwareFn& f, double a, double b, double tol,
                              int level_cap = 12);
QuadratureResult integrate_de(const std::function<double(double)>& f, double a, double b,
                              double tol, int level_cap = 12);

enum class InnerFunction { sin, cos };

/// Integral over [0, pi/2] of a catalog entry composed with sin or cos,
/// evaluated with endpoint care (the composed argument approaches 1 at one
/// endpoint; it is reconstructed from the endpoint distance there).
QuadratureResult oracle_integral(std::string_view name, InnerFunction inner, double tol,
                                 int level_cap = 12);

}  // namespace wallis
