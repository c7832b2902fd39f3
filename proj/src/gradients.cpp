#include "lipopt/gradients.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lipopt/errors.hpp"

namespace lipopt {

double global_gradient(const Objective& f, double x, double y) {
  if (x == y)
    throw DegeneratePairError("global_gradient needs two distinct points, got x == y == " +
                              std::to_string(x));
  return (f(y) - f(x)) / (y - x);
}

double default_fd_step(double x) { return 1e-6 * std::max(1.0, std::fabs(x)); }

double finite_diff(const Objective& f, double x, double h, FdScheme scheme,
                   const std::optional<Interval>& domain) {
  if (!(h > 0.0)) throw InvalidConfigError("finite_diff requires h > 0");
  auto check = [&](double p) {
    if (domain && !domain->contains(p))
      throw StencilOutOfDomainError("stencil point " + std::to_string(p) +
                                    " outside [" + std::to_string(domain->lo()) + ", " +
                                    std::to_string(domain->hi()) + "]");
    return p;
  };
  switch (scheme) {
    case FdScheme::Forward:
      return (f(check(x + h)) - f(check(x))) / h;
    case FdScheme::Backward:
      return (f(check(x)) - f(check(x - h))) / h;
    case FdScheme::Central:
      return (f(check(x + h)) - f(check(x - h))) / (2.0 * h);
  }
  throw InvalidConfigError("unknown finite-difference scheme");
}

LipschitzEstimate estimate_lipschitz(const Objective& f, const Interval& domain,
                                     long long samples, double safety_factor) {
  if (samples < 2) throw InvalidConfigError("estimate_lipschitz requires samples >= 2");
  if (!(safety_factor >= 1.0))
    throw InvalidConfigError("estimate_lipschitz requires safety_factor >= 1");

  const double lo = domain.lo();
  const double span = domain.width();
  double max_slope = 0.0;
  double prev_x = lo;
  double prev_f = f(lo);
  for (long long i = 1; i < samples; ++i) {
    // endpoints land exactly on lo and hi
    const double x = (i == samples - 1)
                         ? domain.hi()
                         : lo + span * (static_cast<double>(i) / static_cast<double>(samples - 1));
    const double fx = f(x);
    max_slope = std::max(max_slope, std::fabs((fx - prev_f) / (x - prev_x)));
    prev_x = x;
    prev_f = fx;
  }
  return LipschitzEstimate{safety_factor * max_slope, samples, safety_factor};
}

}  // namespace lipopt
