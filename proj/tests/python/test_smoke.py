import math

import pytest

import lipopt


def test_registry_and_domains():
    names = lipopt.registry_names()
    assert set(names) == {"f1", "f2", "f3", "quad"}
    assert lipopt.default_domain("f1") == (0.0, 10.0)


def test_oracle_on_the_convex_control():
    res = lipopt.grid_oracle("quad", (0.0, 1.0), n=10001)
    assert res.x_star == pytest.approx(0.5, abs=1e-9)
    assert res.f_star == pytest.approx(0.0, abs=1e-12)
    assert res.refined


def test_sugd_reaches_the_global_minimum_of_f1():
    oracle = lipopt.grid_oracle("f1", (0.0, 10.0), n=200001)
    result, trace = lipopt.minimize_sugd("f1", (0.0, 10.0), alpha=1e-3, tol=1e-6)
    assert result.converged
    assert result.termination == "tolerance_met"
    assert result.f_min - oracle.f_star <= 1e-3
    assert result.evals == result.iters + 2
    assert len(trace) == result.iters + 1
    assert trace[0].iter == 0


def test_gd_gets_trapped_where_sugd_does_not():
    oracle = lipopt.grid_oracle("f1", (0.0, 10.0), n=200001)
    result, trace = lipopt.run_baseline("gd", "f1", (0.0, 10.0), x0=1.0, lr=0.01)
    assert result.termination == "grad_tol"
    assert result.f_x - oracle.f_star >= 4.0
    assert trace[-1].evals == result.evals


def test_python_callables_work_as_objectives():
    result, _ = lipopt.minimize_sugd(lambda x: (x - 0.25) ** 2, (0.0, 1.0),
                                     alpha=0.01, tol=1e-8)
    assert result.x_min == pytest.approx(0.25, abs=1e-3)


def test_expressions_and_gradients():
    assert lipopt.eval_expression("x*sin(x)", 2.0) == pytest.approx(2.0 * math.sin(2.0))
    assert lipopt.eval_expression("-x^2", 3.0) == -9.0
    assert lipopt.global_gradient("quad", 0.0, 1.0) == pytest.approx(0.0, abs=1e-12)
    d = lipopt.finite_diff("f1", 2.0, 1e-6, "central")
    assert d == pytest.approx(math.sin(2.0) + 2.0 * math.cos(2.0), abs=1e-5)


def test_step_bound_helpers():
    a = lipopt.alpha_max(0.1, (0.0, 10.0), 1.0)
    assert a == pytest.approx(0.005)
    n = lipopt.iteration_bound((0.0, 1.0), 1.0, 0.5, 0.5)
    assert n == 2
    est = lipopt.estimate_lipschitz("f1", (0.0, 10.0), samples=20001, safety_factor=1.2)
    assert est.k_hat == pytest.approx(1.2 * 9.6317, rel=1e-3)


def test_errors_carry_through():
    with pytest.raises(lipopt.Error):
        lipopt.grid_oracle("nosuch", (0.0, 1.0))
    with pytest.raises(lipopt.Error):
        lipopt.eval_expression("2x", 1.0)
    with pytest.raises(lipopt.Error):
        lipopt.minimize_sugd("f1", (0.0, 10.0))  # no alpha and no way to derive one
