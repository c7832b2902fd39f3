#pragma once

#include <optional>

#include "lipopt/interval.hpp"
#include "lipopt/objective.hpp"

namespace lipopt {

enum class FdScheme { Forward, Backward, Central };

/// Secant slope between two distinct points: (f(y) - f(x)) / (y - x).
/// Symmetric in its arguments. Performs exactly two evaluations.
/// Throws DegeneratePairError when x == y.
double global_gradient(const Objective& f, double x, double y);

/// Default finite-difference step at x: 1e-6 * max(1, |x|).
double default_fd_step(double x);

/// One-sided or central difference quotient at x. Performs exactly two
/// evaluations for every scheme. When a domain is given, stencil points
/// outside it raise StencilOutOfDomainError.
double finite_diff(const Objective& f, double x, double h, FdScheme scheme,
                   const std::optional<Interval>& domain = std::nullopt);

struct LipschitzEstimate {
  double k_hat = 0.0;
  long long samples = 0;
  double safety_factor = 1.0;
};

/// Estimates a Lipschitz constant as safety_factor times the largest
/// absolute secant slope over consecutive pairs of a uniform grid.
/// Requires samples >= 2 and safety_factor >= 1.
LipschitzEstimate estimate_lipschitz(const Objective& f, const Interval& domain,
                                     long long samples = 10001,
                                     double safety_factor = 1.5);

}  // namespace lipopt
