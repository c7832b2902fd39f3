#pragma once

#include <string>
#include <vector>

#include "lipopt/interval.hpp"
#include "lipopt/objective.hpp"

namespace lipopt {

// The benchmark landscapes, in closed form.
double bench_f1(double x);       // x sin(x)
double bench_f1_prime(double x); // sin(x) + x cos(x)
double bench_f2(double x);       // 2x sin(x^3) - x cos(x^3 / 12)
double bench_f3(double x);       // exp(-0.004(x-35)^2) (sin(0.3x) + exp(-0.2(x-25)^2) sin(5x))
double bench_quad(double x, double c = 0.5);  // (x - c)^2, convex control

struct RegistryEntry {
  std::string name;
  Objective objective;
  Interval default_domain;
  bool analytic_derivative_available = false;
  std::string notes;
};

/// Entry for a named benchmark function, with a fresh evaluation counter.
/// Throws UnknownFunctionError (listing the available names) otherwise.
RegistryEntry lookup(const std::string& name);

std::vector<std::string> registry_names();

struct OracleResult {
  double x_star = 0.0;
  double f_star = 0.0;
  long long grid_points = 0;
  bool refined = false;
};

/// Brute-force ground truth: evaluates f on n uniform points (endpoints
/// included; ties break toward the lower x) and optionally refines the
/// winner with a golden-section search within one grid spacing either side.
/// Throws NonFiniteValueError if any grid evaluation is non-finite.
OracleResult grid_oracle(const Objective& f, const Interval& domain,
                         long long n = 1'000'000, bool refine = true);

}  // namespace lipopt
