#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lipopt/baselines.hpp"
#include "lipopt/benchfns.hpp"
#include "lipopt/emit.hpp"
#include "lipopt/errors.hpp"
#include "lipopt/experiment.hpp"
#include "lipopt/expr.hpp"
#include "lipopt/gradients.hpp"
#include "lipopt/sugd.hpp"

namespace py = pybind11;
using namespace lipopt;

namespace {

// str -> registry name or expression; callable -> wrapped objective
Objective to_objective(const py::object& function) {
  if (py::isinstance<py::str>(function)) return resolve_function(function.cast<std::string>());
  if (py::isinstance<Objective>(function)) return function.cast<Objective>();
  auto fn = function.cast<std::function<double(double)>>();
  return Objective("callable", std::move(fn));
}

Interval to_interval(const std::pair<double, double>& domain) {
  return Interval(domain.first, domain.second);
}

FdScheme fd_scheme_from(const std::string& name) {
  if (name == "forward") return FdScheme::Forward;
  if (name == "backward") return FdScheme::Backward;
  if (name == "central") return FdScheme::Central;
  throw InvalidConfigError("unknown scheme '" + name + "' (forward, backward, central)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "One-dimensional global minimization via bracket contraction, plus "
            "baseline optimizers, benchmark functions and a brute-force oracle.";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def("contains", &Interval::contains)
      .def("__repr__", [](const Interval& i) {
        return "Interval(" + format_double(i.lo()) + ", " + format_double(i.hi()) + ")";
      });

  py::class_<Objective>(m, "Objective")
      .def("__call__", [](const Objective& f, double x) { return f(x); })
      .def_property_readonly("name", &Objective::name)
      .def_property_readonly("eval_count", &Objective::eval_count)
      .def("reset_count", &Objective::reset_count);

  py::class_<LipschitzEstimate>(m, "LipschitzEstimate")
      .def_readonly("k_hat", &LipschitzEstimate::k_hat)
      .def_readonly("samples", &LipschitzEstimate::samples)
      .def_readonly("safety_factor", &LipschitzEstimate::safety_factor);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("x_star", &OracleResult::x_star)
      .def_readonly("f_star", &OracleResult::f_star)
      .def_readonly("grid_points", &OracleResult::grid_points)
      .def_readonly("refined", &OracleResult::refined);

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("iter", &TraceRecord::iter)
      .def_readonly("x1", &TraceRecord::x1)
      .def_readonly("x2", &TraceRecord::x2)
      .def_readonly("f1", &TraceRecord::f1)
      .def_readonly("f2", &TraceRecord::f2)
      .def_readonly("width_metric", &TraceRecord::width_metric);

  py::class_<PointRecord>(m, "PointRecord")
      .def_readonly("iter", &PointRecord::iter)
      .def_readonly("x", &PointRecord::x)
      .def_readonly("f_x", &PointRecord::f_x)
      .def_readonly("grad", &PointRecord::grad)
      .def_readonly("evals", &PointRecord::evals);

  py::class_<SuGDResult>(m, "SuGDResult")
      .def_readonly("x_min", &SuGDResult::x_min)
      .def_readonly("f_min", &SuGDResult::f_min)
      .def_readonly("x_best_seen", &SuGDResult::x_best_seen)
      .def_readonly("f_best_seen", &SuGDResult::f_best_seen)
      .def_readonly("iters", &SuGDResult::iters)
      .def_readonly("evals", &SuGDResult::evals)
      .def_readonly("converged", &SuGDResult::converged)
      .def_property_readonly("termination",
                             [](const SuGDResult& r) { return std::string(to_string(r.termination)); });

  py::class_<BaselineResult>(m, "BaselineResult")
      .def_readonly("x", &BaselineResult::x)
      .def_readonly("f_x", &BaselineResult::f_x)
      .def_readonly("iters", &BaselineResult::iters)
      .def_readonly("evals", &BaselineResult::evals)
      .def_property_readonly("termination", [](const BaselineResult& r) {
        return std::string(to_string(r.termination));
      });

  m.def("registry_names", &registry_names);

  m.def(
      "default_domain",
      [](const std::string& name) {
        const Interval d = lookup(name).default_domain;
        return std::make_pair(d.lo(), d.hi());
      },
      py::arg("name"));

  m.def(
      "grid_oracle",
      [](const py::object& function, std::pair<double, double> domain, long long n, bool refine) {
        return grid_oracle(to_objective(function), to_interval(domain), n, refine);
      },
      py::arg("function"), py::arg("domain"), py::arg("n") = 1'000'000, py::arg("refine") = true);

  m.def(
      "estimate_lipschitz",
      [](const py::object& function, std::pair<double, double> domain, long long samples,
         double safety_factor) {
        return estimate_lipschitz(to_objective(function), to_interval(domain), samples,
                                  safety_factor);
      },
      py::arg("function"), py::arg("domain"), py::arg("samples") = 10001,
      py::arg("safety_factor") = 1.5);

  m.def(
      "global_gradient",
      [](const py::object& function, double x, double y) {
        return global_gradient(to_objective(function), x, y);
      },
      py::arg("function"), py::arg("x"), py::arg("y"));

  m.def(
      "finite_diff",
      [](const py::object& function, double x, double h, const std::string& scheme) {
        return finite_diff(to_objective(function), x, h, fd_scheme_from(scheme));
      },
      py::arg("function"), py::arg("x"), py::arg("h"), py::arg("scheme") = "central");

  m.def(
      "alpha_max",
      [](double epsilon, std::pair<double, double> domain, double k) {
        return alpha_max(epsilon, to_interval(domain), k);
      },
      py::arg("epsilon"), py::arg("domain"), py::arg("k"));

  m.def(
      "iteration_bound",
      [](std::pair<double, double> domain, double k, double tol, double alpha) {
        return iteration_bound(to_interval(domain), k, tol, alpha);
      },
      py::arg("domain"), py::arg("k"), py::arg("tol"), py::arg("alpha"));

  m.def(
      "minimize_sugd",
      [](const py::object& function, std::pair<double, double> domain,
         std::optional<double> alpha, double tol, std::optional<long long> max_iters,
         std::optional<double> k, std::optional<double> epsilon, bool estimate_k, bool force,
         bool record_trace) {
        Objective f = to_objective(function);
        const Interval dom = to_interval(domain);
        SuGDConfig cfg;
        cfg.alpha = alpha;
        cfg.tol = tol;
        cfg.max_iters = max_iters;
        cfg.lipschitz = k;
        cfg.epsilon_target = epsilon;
        cfg.force = force;
        cfg.record_trace = record_trace;
        if (estimate_k) cfg.lipschitz = estimate_lipschitz(f, dom).k_hat;
        SuGDRun run = sugd_run(f, dom, cfg);
        return std::make_pair(run.result, run.trace.records);
      },
      py::arg("function"), py::arg("domain"), py::arg("alpha") = std::nullopt,
      py::arg("tol") = 1e-6, py::arg("max_iters") = std::nullopt, py::arg("k") = std::nullopt,
      py::arg("epsilon") = std::nullopt, py::arg("estimate_k") = false, py::arg("force") = false,
      py::arg("record_trace") = true);

  m.def(
      "run_baseline",
      [](const std::string& kind, const py::object& function, std::pair<double, double> domain,
         double x0, double lr, double grad_tol, long long max_iters, const std::string& fd_scheme,
         std::optional<double> fd_h, double eps_num, double beta1, double beta2, double rho,
         double weight_decay, double momentum) {
        const auto k = baseline_kind_from_string(kind);
        if (!k)
          throw InvalidConfigError("unknown baseline '" + kind +
                                   "' (gd, adagrad, rmsprop, adam, adamw, nag)");
        const auto scheme = grad_scheme_from_string(fd_scheme);
        if (!scheme)
          throw InvalidConfigError("unknown fd_scheme (forward, backward, central, analytic)");
        BaselineConfig cfg;
        cfg.kind = *k;
        cfg.lr = lr;
        cfg.grad_tol = grad_tol;
        cfg.max_iters = max_iters;
        cfg.fd_scheme = *scheme;
        cfg.fd_h = fd_h;
        cfg.eps_num = eps_num;
        cfg.beta1 = beta1;
        cfg.beta2 = beta2;
        cfg.rho = rho;
        cfg.weight_decay = weight_decay;
        cfg.momentum = momentum;
        BaselineRun run = baseline_run(to_objective(function), to_interval(domain), x0, cfg);
        return std::make_pair(run.result, run.trace.records);
      },
      py::arg("kind"), py::arg("function"), py::arg("domain"), py::arg("x0"),
      py::arg("lr") = 0.01, py::arg("grad_tol") = 1e-8, py::arg("max_iters") = 100000,
      py::arg("fd_scheme") = "central", py::arg("fd_h") = std::nullopt,
      py::arg("eps_num") = 1e-8, py::arg("beta1") = 0.9, py::arg("beta2") = 0.999,
      py::arg("rho") = 0.9, py::arg("weight_decay") = 0.01, py::arg("momentum") = 0.9);

  m.def(
      "eval_expression",
      [](const std::string& text, double x) { return parse_expression(text).eval(x); },
      py::arg("text"), py::arg("x"));
}
