#include "lipopt/benchfns.hpp"

#include <cmath>
#include <string>

#include "lipopt/errors.hpp"

namespace lipopt {

double bench_f1(double x) { return x * std::sin(x); }
double bench_f1_prime(double x) { return std::sin(x) + x * std::cos(x); }

double bench_f2(double x) {
  const double x3 = x * x * x;
  return 2.0 * x * std::sin(x3) - x * std::cos(x3 / 12.0);
}

double bench_f3(double x) {
  const double envelope = std::exp(-0.004 * (x - 35.0) * (x - 35.0));
  const double bump = std::exp(-0.2 * (x - 25.0) * (x - 25.0));
  return envelope * (std::sin(0.3 * x) + bump * std::sin(5.0 * x));
}

double bench_quad(double x, double c) { return (x - c) * (x - c); }

RegistryEntry lookup(const std::string& name) {
  // f2 and f3 deliberately expose no analytic derivative: they are the
  // hardly-differentiable challenge cases and are driven by finite
  // differences.
  if (name == "f1")
    return RegistryEntry{"f1",
                         Objective("f1", [](double x) { return bench_f1(x); },
                                   [](double x) { return bench_f1_prime(x); }),
                         Interval(0.0, 10.0), true, "x sin(x); several minima, smooth"};
  if (name == "f2")
    return RegistryEntry{"f2", Objective("f2", [](double x) { return bench_f2(x); }),
                         Interval(0.0, 3.0), false,
                         "2x sin(x^3) - x cos(x^3/12); dense local minima"};
  if (name == "f3")
    return RegistryEntry{"f3", Objective("f3", [](double x) { return bench_f3(x); }),
                         Interval(0.0, 50.0), false,
                         "exponential envelope with a rough inner region around x = 25"};
  if (name == "quad")
    return RegistryEntry{"quad",
                         Objective("quad", [](double x) { return bench_quad(x); },
                                   [](double x) { return 2.0 * (x - 0.5); }),
                         Interval(0.0, 1.0), true, "(x - 0.5)^2, convex control"};

  std::string names;
  for (const auto& n : registry_names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  throw UnknownFunctionError("unknown function '" + name + "' (available: " + names + ")");
}

std::vector<std::string> registry_names() { return {"f1", "f2", "f3", "quad"}; }

namespace {

// Golden-section search on [a, b]; returns the best point evaluated.
// f is assumed unimodal-ish on the sliver being refined, but the best-seen
// tracking keeps the result sound regardless.
void golden_refine(const Objective& f, double a, double b, double& best_x, double& best_f) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  auto consider = [&](double x, double fx) {
    if (fx < best_f) { best_x = x; best_f = fx; }
  };
  consider(c, fc);
  consider(d, fd);
  for (int i = 0; i < 200 && (b - a) > 1e-14 * std::max(1.0, std::fabs(a) + std::fabs(b)); ++i) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
}

}  // namespace

OracleResult grid_oracle(const Objective& f, const Interval& domain, long long n, bool refine) {
  if (n < 2) throw InvalidConfigError("grid_oracle requires n >= 2");

  const double lo = domain.lo();
  const double span = domain.width();
  double best_x = lo;
  double best_f = f(lo);
  if (!std::isfinite(best_f)) throw NonFiniteValueError(lo, "non-finite objective on the grid");
  for (long long i = 1; i < n; ++i) {
    const double x = (i == n - 1)
                         ? domain.hi()
                         : lo + span * (static_cast<double>(i) / static_cast<double>(n - 1));
    const double fx = f(x);
    if (!std::isfinite(fx)) throw NonFiniteValueError(x, "non-finite objective on the grid");
    if (fx < best_f) { best_x = x; best_f = fx; }  // strict: first index wins ties
  }

  OracleResult result{best_x, best_f, n, false};
  if (refine) {
    const double spacing = span / static_cast<double>(n - 1);
    const double a = std::max(lo, best_x - spacing);
    const double b = std::min(domain.hi(), best_x + spacing);
    double rx = best_x, rf = best_f;
    golden_refine(f, a, b, rx, rf);
    if (rf < result.f_star) { result.x_star = rx; result.f_star = rf; }
    result.refined = true;
  }
  return result;
}

}  // namespace lipopt
