#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "lipopt/benchfns.hpp"
#include "lipopt/errors.hpp"
#include "lipopt/expr.hpp"
#include "lipopt/gradients.hpp"

using namespace lipopt;

TEST_CASE("closed forms at hand-checkable points") {
  CHECK(bench_f1(0.0) == 0.0);
  CHECK(std::fabs(bench_f1(3.14159265358979323846)) <= 1e-14);
  CHECK(bench_f2(0.0) == 0.0);
  CHECK(bench_f3(25.0) ==
        doctest::Approx(std::exp(-0.4) * (std::sin(7.5) + std::sin(125.0))).epsilon(1e-14));
  CHECK(bench_quad(0.5) == 0.0);
  CHECK(bench_quad(0.0, 3.0) == 9.0);
}

TEST_CASE("analytic and central-difference derivatives of f1 agree") {
  Objective f("f1", bench_f1);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    const double num = finite_diff(f, x, default_fd_step(x), FdScheme::Central);
    CHECK(std::fabs(num - bench_f1_prime(x)) <= 1e-5);
  }
}

TEST_CASE("registry lookup") {
  const auto f1e = lookup("f1");
  CHECK(f1e.default_domain == Interval(0.0, 10.0));
  CHECK(f1e.analytic_derivative_available);
  CHECK(f1e.objective(2.0) == bench_f1(2.0));

  const auto qe = lookup("quad");
  CHECK(qe.default_domain == Interval(0.0, 1.0));

  CHECK(lookup("f2").default_domain == Interval(0.0, 3.0));
  CHECK(!lookup("f2").analytic_derivative_available);
  CHECK(lookup("f3").default_domain == Interval(0.0, 50.0));

  CHECK_THROWS_AS(lookup("nosuch"), UnknownFunctionError);
  CHECK(registry_names().size() == 4);
}

TEST_CASE("registry lookups carry fresh evaluation counters") {
  auto a = lookup("f1");
  a.objective(1.0);
  a.objective(2.0);
  CHECK(a.objective.eval_count() == 2);
  CHECK(lookup("f1").objective.eval_count() == 0);
}

TEST_CASE("grid oracle finds on-grid minima exactly") {
  Objective q("quad", [](double x) { return bench_quad(x); });
  const auto res = grid_oracle(q, Interval(0.0, 1.0), 1001, true);
  CHECK(res.x_star == 0.5);
  CHECK(res.f_star == 0.0);
  CHECK(res.grid_points == 1001);
  CHECK(res.refined);
}

TEST_CASE("grid oracle breaks ties toward the lower x") {
  Objective c("const", [](double) { return 2.5; });
  const auto res = grid_oracle(c, Interval(0.0, 1.0), 11, false);
  CHECK(res.x_star == 0.0);
  CHECK(res.f_star == 2.5);
}

TEST_CASE("grid oracle reproduces the pinned landscape fixtures") {
  const auto o1 = grid_oracle(lookup("f1").objective, Interval(0.0, 10.0), 1000000, true);
  CHECK(std::fabs(o1.x_star - fixtures::kF1XStar) <= fixtures::kOracleTol);
  CHECK(std::fabs(o1.f_star - fixtures::kF1FStar) <= fixtures::kOracleTol);

  const auto o2 = grid_oracle(lookup("f2").objective, Interval(0.0, 3.0), 1000000, true);
  CHECK(std::fabs(o2.x_star - fixtures::kF2XStar) <= fixtures::kOracleTol);
  CHECK(std::fabs(o2.f_star - fixtures::kF2FStar) <= fixtures::kOracleTol);

  const auto o3 = grid_oracle(lookup("f3").objective, Interval(0.0, 50.0), 1000000, true);
  CHECK(std::fabs(o3.x_star - fixtures::kF3XStar) <= fixtures::kOracleTol);
  CHECK(std::fabs(o3.f_star - fixtures::kF3FStar) <= fixtures::kOracleTol);
}

TEST_CASE("doubling the grid never lifts the oracle value") {
  const Objective f = lookup("f2").objective;
  const Interval dom(0.0, 3.0);
  double prev = grid_oracle(f, dom, 50000, true).f_star;
  for (long long n : {100000, 200000, 400000}) {
    const double cur = grid_oracle(f, dom, n, true).f_star;
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("grid oracle refuses non-finite landscapes") {
  Objective f = parse_expression("log(x)").to_objective();
  CHECK_THROWS_AS(grid_oracle(f, Interval(-1.0, 1.0), 101, false), NonFiniteValueError);
  CHECK_THROWS_AS(grid_oracle(f, Interval(-1.0, 1.0), 1, false), InvalidConfigError);
}
