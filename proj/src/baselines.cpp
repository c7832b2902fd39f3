#include "lipopt/baselines.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "lipopt/errors.hpp"

namespace lipopt {

const char* to_string(BaselineKind k) {
  switch (k) {
    case BaselineKind::GD: return "gd";
    case BaselineKind::AdaGrad: return "adagrad";
    case BaselineKind::RMSprop: return "rmsprop";
    case BaselineKind::Adam: return "adam";
    case BaselineKind::AdamW: return "adamw";
    case BaselineKind::NAG: return "nag";
  }
  return "unknown";
}

std::optional<BaselineKind> baseline_kind_from_string(const std::string& name) {
  if (name == "gd") return BaselineKind::GD;
  if (name == "adagrad") return BaselineKind::AdaGrad;
  if (name == "rmsprop") return BaselineKind::RMSprop;
  if (name == "adam") return BaselineKind::Adam;
  if (name == "adamw") return BaselineKind::AdamW;
  if (name == "nag") return BaselineKind::NAG;
  return std::nullopt;
}

const char* to_string(GradScheme s) {
  switch (s) {
    case GradScheme::Forward: return "forward";
    case GradScheme::Backward: return "backward";
    case GradScheme::Central: return "central";
    case GradScheme::Analytic: return "analytic";
  }
  return "unknown";
}

std::optional<GradScheme> grad_scheme_from_string(const std::string& name) {
  if (name == "forward") return GradScheme::Forward;
  if (name == "backward") return GradScheme::Backward;
  if (name == "central") return GradScheme::Central;
  if (name == "analytic") return GradScheme::Analytic;
  return std::nullopt;
}

const char* to_string(BaselineTermination t) {
  switch (t) {
    case BaselineTermination::GradTol: return "grad_tol";
    case BaselineTermination::MaxIters: return "max_iters";
    case BaselineTermination::Diverged: return "diverged";
  }
  return "unknown";
}

BaselineState gd_step(BaselineState s, double g, const BaselineConfig& cfg) {
  s.x -= cfg.lr * g;
  s.t += 1;
  return s;
}

BaselineState adagrad_step(BaselineState s, double g, const BaselineConfig& cfg) {
  s.accum_g2 += g * g;
  s.x -= cfg.lr * g / std::sqrt(s.accum_g2 + cfg.eps_num);
  s.t += 1;
  return s;
}

BaselineState rmsprop_step(BaselineState s, double g, const BaselineConfig& cfg) {
  s.ema_g2 = cfg.rho * s.ema_g2 + (1.0 - cfg.rho) * g * g;
  s.x -= cfg.lr * g / std::sqrt(s.ema_g2 + cfg.eps_num);
  s.t += 1;
  return s;
}

BaselineState adam_step(BaselineState s, double g, const BaselineConfig& cfg) {
  s.t += 1;
  s.m = cfg.beta1 * s.m + (1.0 - cfg.beta1) * g;
  s.v = cfg.beta2 * s.v + (1.0 - cfg.beta2) * g * g;
  const double m_hat = s.m / (1.0 - std::pow(cfg.beta1, static_cast<double>(s.t)));
  const double v_hat = s.v / (1.0 - std::pow(cfg.beta2, static_cast<double>(s.t)));
  s.x -= cfg.lr * m_hat / (std::sqrt(v_hat) + cfg.eps_num);
  return s;
}

BaselineState adamw_step(BaselineState s, double g, const BaselineConfig& cfg) {
  const double x_pre = s.x;
  s = adam_step(s, g, cfg);
  // decoupled weight decay, applied to the pre-step parameter
  s.x -= cfg.lr * cfg.weight_decay * x_pre;
  return s;
}

double baseline_gradient(const Objective& f, double x, const BaselineConfig& cfg) {
  if (cfg.fd_scheme == GradScheme::Analytic) {
    if (!f.has_derivative())
      throw InvalidConfigError("analytic gradients requested but objective '" + f.name() +
                               "' has no derivative");
    return f.derivative(x);
  }
  const double h = cfg.fd_h ? *cfg.fd_h : default_fd_step(x);
  switch (cfg.fd_scheme) {
    case GradScheme::Forward: return (f(x + h) - f(x)) / h;
    case GradScheme::Backward: return (f(x) - f(x - h)) / h;
    default: return (f(x + h) - f(x - h)) / (2.0 * h);
  }
}

namespace {

BaselineState nag_apply(BaselineState s, double g_look_ahead, const BaselineConfig& cfg) {
  s.velocity = cfg.momentum * s.velocity + cfg.lr * g_look_ahead;
  s.x -= s.velocity;
  s.t += 1;
  return s;
}

}  // namespace

BaselineState nag_step(BaselineState s, const Objective& f, const BaselineConfig& cfg) {
  const double look_ahead = s.x - cfg.momentum * s.velocity;
  return nag_apply(std::move(s), baseline_gradient(f, look_ahead, cfg), cfg);
}

bool detect_divergence(double x, double f_x, const Interval& domain) {
  return !std::isfinite(x) || !std::isfinite(f_x) || !domain.contains(x);
}

namespace {

void validate(const BaselineConfig& cfg) {
  auto in_unit = [](double v) { return v >= 0.0 && v < 1.0; };
  if (!(cfg.lr > 0.0)) throw InvalidConfigError("baseline requires lr > 0");
  if (!(cfg.eps_num > 0.0)) throw InvalidConfigError("baseline requires eps_num > 0");
  if (!in_unit(cfg.beta1)) throw InvalidConfigError("baseline requires beta1 in [0,1)");
  if (!in_unit(cfg.beta2)) throw InvalidConfigError("baseline requires beta2 in [0,1)");
  if (!in_unit(cfg.rho)) throw InvalidConfigError("baseline requires rho in [0,1)");
  if (!(cfg.weight_decay >= 0.0)) throw InvalidConfigError("baseline requires weight_decay >= 0");
  if (!in_unit(cfg.momentum)) throw InvalidConfigError("baseline requires momentum in [0,1)");
  if (cfg.fd_h && !(*cfg.fd_h > 0.0)) throw InvalidConfigError("baseline requires fd_h > 0");
  if (!(cfg.max_iters > 0)) throw InvalidConfigError("baseline requires max_iters > 0");
  if (!(cfg.grad_tol > 0.0)) throw InvalidConfigError("baseline requires grad_tol > 0");
}

BaselineState apply_step(const BaselineState& s, double g, const Objective& f,
                         const BaselineConfig& cfg) {
  switch (cfg.kind) {
    case BaselineKind::GD: return gd_step(s, g, cfg);
    case BaselineKind::AdaGrad: return adagrad_step(s, g, cfg);
    case BaselineKind::RMSprop: return rmsprop_step(s, g, cfg);
    case BaselineKind::Adam: return adam_step(s, g, cfg);
    case BaselineKind::AdamW: return adamw_step(s, g, cfg);
    case BaselineKind::NAG: return nag_step(s, f, cfg);
  }
  throw InvalidConfigError("unknown baseline kind");
}

}  // namespace

BaselineRun baseline_run(const Objective& f, const Interval& domain, double x0,
                         const BaselineConfig& cfg) {
  validate(cfg);
  if (!domain.contains(x0))
    throw InvalidConfigError("x0 = " + std::to_string(x0) + " outside the search domain");

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  const long long evals_before = f.eval_count();

  BaselineState s;
  s.x = x0;
  double fx = f(s.x);

  BaselineRun run;
  BaselineTermination term = BaselineTermination::MaxIters;

  if (!std::isfinite(fx)) {
    run.trace.records.push_back({0, s.x, fx, nan, f.eval_count() - evals_before});
    term = BaselineTermination::Diverged;
  } else {
    while (true) {
      // NAG's look-ahead can leave the domain before any stencil point is
      // evaluated; treat that as divergence of the run.
      if (cfg.kind == BaselineKind::NAG) {
        const double la = s.x - cfg.momentum * s.velocity;
        if (!std::isfinite(la) || !domain.contains(la)) {
          run.trace.records.push_back({s.t, s.x, fx, nan, f.eval_count() - evals_before});
          term = BaselineTermination::Diverged;
          break;
        }
      }
      const double g = (cfg.kind == BaselineKind::NAG)
                           ? baseline_gradient(f, s.x - cfg.momentum * s.velocity, cfg)
                           : baseline_gradient(f, s.x, cfg);
      run.trace.records.push_back({s.t, s.x, fx, g, f.eval_count() - evals_before});
      if (std::fabs(g) <= cfg.grad_tol) {
        term = BaselineTermination::GradTol;
        break;
      }
      if (s.t >= cfg.max_iters) {
        term = BaselineTermination::MaxIters;
        break;
      }
      // g was already taken at the right point (look-ahead for NAG), so NAG
      // reuses it here instead of going through nag_step again.
      BaselineState next = (cfg.kind == BaselineKind::NAG) ? nag_apply(s, g, cfg)
                                                           : apply_step(s, g, f, cfg);
      const double fn = f(next.x);
      if (detect_divergence(next.x, fn, domain)) {
        s = next;
        fx = fn;
        run.trace.records.push_back({s.t, s.x, fx, nan, f.eval_count() - evals_before});
        term = BaselineTermination::Diverged;
        break;
      }
      s = next;
      fx = fn;
    }
  }

  run.result.x = s.x;
  run.result.f_x = fx;
  run.result.iters = s.t;
  run.result.evals = f.eval_count() - evals_before;
  run.result.termination = term;
  return run;
}

}  // namespace lipopt
