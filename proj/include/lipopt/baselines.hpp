#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lipopt/gradients.hpp"
#include "lipopt/interval.hpp"
#include "lipopt/objective.hpp"

namespace lipopt {

enum class BaselineKind { GD, AdaGrad, RMSprop, Adam, AdamW, NAG };

const char* to_string(BaselineKind k);
std::optional<BaselineKind> baseline_kind_from_string(const std::string& name);

enum class GradScheme { Forward, Backward, Central, Analytic };

const char* to_string(GradScheme s);
std::optional<GradScheme> grad_scheme_from_string(const std::string& name);

struct BaselineConfig {
  BaselineKind kind = BaselineKind::GD;
  double lr = 0.01;            // learning rate
  double eps_num = 1e-8;       // numerical-stability constant
  double beta1 = 0.9;          // Adam/AdamW first-moment decay
  double beta2 = 0.999;        // Adam/AdamW second-moment decay
  double rho = 0.9;            // RMSprop decay
  double weight_decay = 0.01;  // AdamW lambda
  double momentum = 0.9;       // NAG beta
  GradScheme fd_scheme = GradScheme::Central;
  std::optional<double> fd_h;  // finite-difference step; default_fd_step(x) when absent
  long long max_iters = 100000;
  double grad_tol = 1e-8;      // stop when |g| <= grad_tol
};

struct BaselineState {
  double x = 0.0;
  long long t = 0;         // completed steps
  double accum_g2 = 0.0;   // AdaGrad sum of squared gradients
  double ema_g2 = 0.0;     // RMSprop decaying average of squared gradients
  double m = 0.0;          // Adam first moment
  double v = 0.0;          // Adam second moment
  double velocity = 0.0;   // NAG momentum term
};

struct PointRecord {
  long long iter;
  double x, f_x, grad;
  long long evals;  // cumulative objective evaluations at record time
};

struct PointTrace {
  std::vector<PointRecord> records;
};

enum class BaselineTermination { GradTol, MaxIters, Diverged };

const char* to_string(BaselineTermination t);

struct BaselineResult {
  double x = 0.0;
  double f_x = 0.0;
  long long iters = 0;
  long long evals = 0;
  BaselineTermination termination = BaselineTermination::MaxIters;
};

struct BaselineRun {
  BaselineResult result;
  PointTrace trace;
};

// Single parameter updates. Gradient accumulators are updated before the
// step is taken (a pre-update accumulator would divide by ~0 on the first
// AdaGrad/RMSprop step).
BaselineState gd_step(BaselineState s, double g, const BaselineConfig& cfg);
BaselineState adagrad_step(BaselineState s, double g, const BaselineConfig& cfg);
BaselineState rmsprop_step(BaselineState s, double g, const BaselineConfig& cfg);
BaselineState adam_step(BaselineState s, double g, const BaselineConfig& cfg);
BaselineState adamw_step(BaselineState s, double g, const BaselineConfig& cfg);

/// NAG evaluates its gradient at the look-ahead point x - momentum*velocity,
/// then v' = momentum*v + lr*g, x' = x - v'. The look-ahead gradient is
/// computed here, so this step takes the objective rather than a gradient.
BaselineState nag_step(BaselineState s, const Objective& f, const BaselineConfig& cfg);

/// True iff x lies outside the domain or x/f_x is non-finite. Iterates are
/// never clamped; leaving [lo, hi] ends the run as Diverged.
bool detect_divergence(double x, double f_x, const Interval& domain);

/// Gradient of f at x under the configured scheme. Stencil points are not
/// domain-checked (objectives extend past the search interval; escape is
/// handled by divergence detection on the iterates instead).
double baseline_gradient(const Objective& f, double x, const BaselineConfig& cfg);

/// Runs the configured optimizer from x0 until |g| <= grad_tol, max_iters
/// steps, or divergence. The trace has one record per visited point with the
/// gradient used there (nan for a final point whose gradient was never
/// taken).
BaselineRun baseline_run(const Objective& f, const Interval& domain, double x0,
                         const BaselineConfig& cfg);

}  // namespace lipopt
