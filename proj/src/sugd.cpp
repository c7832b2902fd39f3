#include "lipopt/sugd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lipopt/errors.hpp"

namespace lipopt {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::ToleranceMet: return "tolerance_met";
    case Termination::MaxIters: return "max_iters";
    case Termination::BracketCollapse: return "bracket_collapse";
  }
  return "unknown";
}

double alpha_max(double epsilon, const Interval& domain, double k) {
  if (!(epsilon > 0.0)) throw InvalidConfigError("alpha_max requires epsilon > 0");
  if (!(k > 0.0))
    throw NonpositiveKError("alpha_max requires k > 0 (k = 0 means a constant function)");
  return epsilon / (domain.width() * (1.0 + k) * k);
}

double width_metric(const BracketState& s) {
  const double secant = (s.f2 - s.f1) / (s.x2 - s.x1);
  return std::fabs(s.x2 - s.x1) * (1.0 + std::fabs(secant));
}

BracketState sugd_step(const Objective& f, const BracketState& s, double alpha) {
  const double secant = (s.f2 - s.f1) / (s.x2 - s.x1);  // F(x2, x1)
  const double contracted = (1.0 - alpha) * (s.x2 - s.x1);
  // In real arithmetic the moved endpoint contracts the width to at most
  // (1-alpha)*w, since the taken branch has (1 -/+ F) >= 1. Rounding the
  // update at the endpoint's magnitude can land a hair outside that when
  // F ~ 0; a one-ulp inward nudge restores the invariant.
  BracketState next = s;
  if (s.f2 - s.f1 < 0.0) {
    double x1p = s.x1 - alpha * (s.x1 - s.x2) * (1.0 - secant);
    for (int i = 0; i < 3 && x1p < s.x2 && s.x2 - x1p > contracted; ++i)
      x1p = std::nextafter(x1p, s.x2);
    if (x1p >= s.x2)
      throw BracketCollapseError("left endpoint crossed the bracket at iter " +
                                 std::to_string(s.iter) + " (alpha too large for this k)");
    next.x1 = x1p;
    next.f1 = f(x1p);
    if (!std::isfinite(next.f1))
      throw NonFiniteValueError(next.x1, "objective returned a non-finite value at x = " +
                                             std::to_string(next.x1));
  } else {
    double x2p = s.x2 - alpha * (s.x2 - s.x1) * (1.0 + secant);
    for (int i = 0; i < 3 && x2p > s.x1 && x2p - s.x1 > contracted; ++i)
      x2p = std::nextafter(x2p, s.x1);
    if (x2p <= s.x1)
      throw BracketCollapseError("right endpoint crossed the bracket at iter " +
                                 std::to_string(s.iter) + " (alpha too large for this k)");
    next.x2 = x2p;
    next.f2 = f(x2p);
    if (!std::isfinite(next.f2))
      throw NonFiniteValueError(next.x2, "objective returned a non-finite value at x = " +
                                             std::to_string(next.x2));
  }
  next.iter = s.iter + 1;
  return next;
}

long long iteration_bound(const Interval& domain, double k, double tol, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw InvalidConfigError("iteration_bound requires alpha in (0, 1)");
  if (!(tol > 0.0)) throw InvalidConfigError("iteration_bound requires tol > 0");
  if (!(k >= 0.0)) throw InvalidConfigError("iteration_bound requires k >= 0");
  const double ratio = tol / (domain.width() * (1.0 + k));
  if (ratio >= 1.0) return 0;
  const double n = std::ceil(std::log(ratio) / std::log1p(-alpha));
  return n <= 0.0 ? 0 : static_cast<long long>(n);
}

SuGDConfig resolve_sugd_config(const SuGDConfig& cfg, const Interval& domain) {
  SuGDConfig r = cfg;
  if (!(r.tol > 0.0)) throw InvalidConfigError("sugd requires tol > 0");
  if (r.lipschitz && !(*r.lipschitz >= 0.0))
    throw InvalidConfigError("sugd requires lipschitz >= 0 when given");

  if (!r.alpha) {
    if (!r.epsilon_target || !r.lipschitz)
      throw InvalidConfigError(
          "sugd needs alpha, or epsilon_target together with lipschitz to derive it");
    const double k = *r.lipschitz;
    r.alpha = std::min(alpha_max(*r.epsilon_target, domain, k), 0.5 / (1.0 + k));
  }
  if (!(*r.alpha > 0.0)) throw InvalidConfigError("sugd requires alpha > 0");

  if (r.lipschitz && !r.force && !(*r.alpha * (1.0 + *r.lipschitz) < 1.0))
    throw InvalidConfigError(
        "alpha*(1+k) < 1 is violated; the bracket endpoints could cross "
        "(pass force to run anyway)");

  if (!r.max_iters) {
    if (r.lipschitz && *r.alpha * (1.0 + *r.lipschitz) < 1.0 && *r.alpha < 1.0)
      r.max_iters = 2 * std::max<long long>(1, iteration_bound(domain, *r.lipschitz, r.tol, *r.alpha));
    else
      r.max_iters = 10'000'000;
  }
  if (!(*r.max_iters > 0)) throw InvalidConfigError("sugd requires max_iters > 0");
  return r;
}

SuGDRun sugd_run(const Objective& f, const Interval& domain, const SuGDConfig& cfg,
                 const StepObserver& observe) {
  const SuGDConfig rc = resolve_sugd_config(cfg, domain);
  const double alpha = *rc.alpha;
  const long long max_iters = *rc.max_iters;
  const long long evals_before = f.eval_count();

  BracketState s;
  s.x1 = domain.lo();
  s.x2 = domain.hi();
  s.f1 = f(s.x1);
  s.f2 = f(s.x2);
  if (!std::isfinite(s.f1)) throw NonFiniteValueError(s.x1, "objective non-finite at left endpoint");
  if (!std::isfinite(s.f2)) throw NonFiniteValueError(s.x2, "objective non-finite at right endpoint");

  double best_x = s.x1, best_f = s.f1;
  if (s.f2 < best_f) { best_x = s.x2; best_f = s.f2; }

  SuGDRun run;
  if (rc.record_trace) run.trace.records.push_back({0, s.x1, s.x2, s.f1, s.f2, width_metric(s)});

  Termination term = Termination::MaxIters;
  bool converged = false;
  while (true) {
    if (width_metric(s) <= rc.tol) {
      term = Termination::ToleranceMet;
      converged = true;
      break;
    }
    if (s.iter >= max_iters) {
      term = Termination::MaxIters;
      break;
    }
    BracketState next;
    try {
      next = sugd_step(f, s, alpha);
    } catch (const BracketCollapseError&) {
      if (!rc.force) throw;
      term = Termination::BracketCollapse;
      break;
    }
    const bool moved_left = s.f2 - s.f1 < 0.0;  // same branch condition as sugd_step
    const double moved_f = moved_left ? next.f1 : next.f2;
    const double moved_x = moved_left ? next.x1 : next.x2;
    if (moved_f < best_f) { best_x = moved_x; best_f = moved_f; }
    if (observe) observe(s, next);
    if (rc.record_trace)
      run.trace.records.push_back({next.iter, next.x1, next.x2, next.f1, next.f2, width_metric(next)});
    s = next;
  }

  run.result.x_min = s.x1;
  run.result.f_min = s.f1;
  run.result.x_best_seen = best_x;
  run.result.f_best_seen = best_f;
  run.result.iters = s.iter;
  run.result.evals = f.eval_count() - evals_before;
  run.result.converged = converged;
  run.result.termination = term;
  return run;
}

}  // namespace lipopt
