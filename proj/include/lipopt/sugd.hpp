#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lipopt/gradients.hpp"
#include "lipopt/interval.hpp"
#include "lipopt/objective.hpp"

namespace lipopt {

/// The contracting bracket (x1, x2) with cached objective values.
/// Every state produced by a valid run keeps x1 < x2; exactly one endpoint
/// moves inward per step and the other is left bitwise untouched.
struct BracketState {
  double x1 = 0.0;
  double x2 = 0.0;
  double f1 = 0.0;  // cached f(x1)
  double f2 = 0.0;  // cached f(x2)
  long long iter = 0;
};

enum class Termination {
  ToleranceMet,
  MaxIters,
  // Only reachable when SuGDConfig::force disabled the step-size guard and a
  // step would have crossed the endpoints; the run stops and records it.
  BracketCollapse,
};

const char* to_string(Termination t);

struct SuGDConfig {
  std::optional<double> alpha;      // optimization step; resolved from
                                    // epsilon_target/lipschitz when absent
  double tol = 1e-6;                // stopping tolerance on the width metric
  std::optional<long long> max_iters;
  std::optional<double> lipschitz;       // k, when known or estimated
  std::optional<double> epsilon_target;  // target accuracy used to derive alpha
  bool force = false;       // skip the alpha*(1+k) < 1 validation
  bool record_trace = true; // set false for very long runs to skip the trace
};

struct SuGDResult {
  double x_min = 0.0;       // final x1 (the algorithm's returned iterate)
  double f_min = 0.0;       // final f(x1)
  double x_best_seen = 0.0; // best point over every evaluation performed
  double f_best_seen = 0.0;
  long long iters = 0;
  long long evals = 0;
  bool converged = false;
  Termination termination = Termination::MaxIters;
};

struct TraceRecord {
  long long iter;
  double x1, x2, f1, f2, width_metric;
};

struct BracketTrace {
  std::vector<TraceRecord> records;
};

struct SuGDRun {
  SuGDResult result;
  BracketTrace trace;
};

/// The guaranteed-convergence step bound: epsilon / ((hi-lo) * (1+k) * k).
/// Any step in (0, alpha_max] keeps the bracket around the global minimum
/// to epsilon accuracy. Throws NonpositiveKError when k <= 0 (a 0-Lipschitz
/// function is constant; every point is already optimal).
double alpha_max(double epsilon, const Interval& domain, double k);

/// Stopping quantity |x2-x1| * (1 + |F(x2,x1)|), from the cached values.
double width_metric(const BracketState& s);

/// One bracket-contraction step.
///
/// With F = F(x2,x1) computed from the cached values:
///   f2 - f1 <  0:  x1' = x1 - alpha*(x1-x2)*(1 - F)   (left endpoint moves right)
///   f2 - f1 >= 0:  x2' = x2 - alpha*(x2-x1)*(1 + F)   (right endpoint moves left)
/// The moved endpoint is evaluated fresh (exactly one evaluation); the other
/// cache is retained. Throws BracketCollapseError if the step would produce
/// x1' >= x2 or x2' <= x1, and NonFiniteValueError if the new value is not
/// finite.
BracketState sugd_step(const Objective& f, const BracketState& s, double alpha);

/// Worst-case iteration count until the width metric falls under tol, from
/// the per-step contraction w' <= (1-alpha)*w and the bound
/// width_metric <= w*(1+k): ceil(ln(tol / ((hi-lo)(1+k))) / ln(1-alpha)),
/// clamped at zero. Requires alpha in (0,1), tol > 0, k >= 0. The count is
/// only a running-time guarantee when the no-crossing guard alpha*(1+k) < 1
/// also holds.
long long iteration_bound(const Interval& domain, double k, double tol, double alpha);

/// Copy of cfg with alpha and max_iters filled in and validated:
///   - alpha absent: requires epsilon_target and lipschitz, then
///     alpha = min(alpha_max(eps, domain, k), 0.5/(1+k))
///   - max_iters absent: 2 * iteration_bound(...) when lipschitz is known,
///     else 10^7
///   - when lipschitz is present, alpha*(1+k) < 1 must hold unless force.
SuGDConfig resolve_sugd_config(const SuGDConfig& cfg, const Interval& domain);

/// Called after every accepted step with the state before and after.
using StepObserver = std::function<void(const BracketState&, const BracketState&)>;

/// Full run: initializes the bracket to the domain endpoints and steps while
/// width_metric > tol, up to max_iters. The trace holds the initial state
/// plus one record per step (when cfg.record_trace).
SuGDRun sugd_run(const Objective& f, const Interval& domain, const SuGDConfig& cfg,
                 const StepObserver& observe = {});

}  // namespace lipopt
