#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "lipopt/benchfns.hpp"
#include "lipopt/errors.hpp"
#include "lipopt/gradients.hpp"

using namespace lipopt;

TEST_CASE("interval validates its endpoints") {
  CHECK(Interval(0.0, 1.0).width() == 1.0);
  CHECK(Interval(-2.0, 3.0).contains(0.0));
  CHECK(!Interval(-2.0, 3.0).contains(3.5));
  CHECK_THROWS_AS(Interval(1.0, 1.0), InvalidConfigError);
  CHECK_THROWS_AS(Interval(2.0, 1.0), InvalidConfigError);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()), InvalidConfigError);
  CHECK_THROWS_AS(Interval(std::nan(""), 1.0), InvalidConfigError);
}

TEST_CASE("objective counts evaluations, also across threads") {
  Objective f("square", [](double x) { return x * x; });
  CHECK(f(3.0) == 9.0);
  CHECK(f(3.0) == 9.0);  // deterministic
  CHECK(f.eval_count() == 2);
  f.reset_count();

  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&f] {
      for (int i = 0; i < 10000; ++i) f(1.5);
    });
  for (auto& w : workers) w.join();
  CHECK(f.eval_count() == 40000);
}

TEST_CASE("global gradient matches the secant slope") {
  Objective sq("square", [](double x) { return x * x; });
  CHECK(global_gradient(sq, 1.0, 3.0) == doctest::Approx(4.0));

  Objective c("const", [](double) { return 7.5; });
  CHECK(global_gradient(c, 0.2, 0.9) == 0.0);

  Objective f1o("f1", bench_f1);
  CHECK(std::fabs(global_gradient(f1o, 0.0, 3.14159265358979323846)) <= 1e-15);

  CHECK_THROWS_AS(global_gradient(sq, 2.0, 2.0), DegeneratePairError);
}

TEST_CASE("global gradient is symmetric and spends exactly two evaluations") {
  Objective f("f1", bench_f1);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    double x = u(rng), y = u(rng);
    if (x == y) continue;
    const long long before = f.eval_count();
    const double a = global_gradient(f, x, y);
    CHECK(f.eval_count() - before == 2);
    CHECK(a == global_gradient(f, y, x));  // sign cancellation is exact
  }
}

TEST_CASE("global gradient of sin stays within the Lipschitz bound") {
  Objective s("sin", [](double x) { return std::sin(x); });
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 2000; ++i) {
    double x = u(rng), y = u(rng);
    if (x == y) continue;
    CHECK(std::fabs(global_gradient(s, x, y)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("finite differences hit the classic stencils") {
  Objective cube("cube", [](double x) { return x * x * x; });
  CHECK(finite_diff(cube, 1.0, 0.01, FdScheme::Central) == doctest::Approx(3.0001).epsilon(1e-9));

  Objective sq("square", [](double x) { return x * x; });
  CHECK(finite_diff(sq, 0.0, 0.1, FdScheme::Central) == 0.0);

  Objective lin("line", [](double x) { return x; });
  CHECK(finite_diff(lin, 1.0, 0.5, FdScheme::Forward) == 1.0);

  const long long before = sq.eval_count();
  finite_diff(sq, 0.5, 1e-6, FdScheme::Forward);
  finite_diff(sq, 0.5, 1e-6, FdScheme::Backward);
  finite_diff(sq, 0.5, 1e-6, FdScheme::Central);
  CHECK(sq.eval_count() - before == 6);  // two per call

  CHECK_THROWS_AS(finite_diff(sq, 0.5, 0.0, FdScheme::Central), InvalidConfigError);
}

TEST_CASE("finite difference stencils respect an explicit domain") {
  Objective sq("square", [](double x) { return x * x; });
  const Interval dom(0.0, 1.0);
  CHECK_THROWS_AS(finite_diff(sq, 1.0, 0.1, FdScheme::Central, dom), StencilOutOfDomainError);
  CHECK_THROWS_AS(finite_diff(sq, 0.0, 0.1, FdScheme::Backward, dom), StencilOutOfDomainError);
  CHECK(finite_diff(sq, 0.5, 0.1, FdScheme::Central, dom) == doctest::Approx(1.0));
}

TEST_CASE("central difference error shrinks about 4x when h halves") {
  Objective cube("cube", [](double x) { return x * x * x; });
  const double e1 = std::fabs(finite_diff(cube, 1.0, 1e-2, FdScheme::Central) - 3.0);
  const double e2 = std::fabs(finite_diff(cube, 1.0, 5e-3, FdScheme::Central) - 3.0);
  const double ratio = e1 / e2;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("default finite-difference step scales with |x|") {
  CHECK(default_fd_step(0.0) == 1e-6);
  CHECK(default_fd_step(0.5) == 1e-6);
  CHECK(default_fd_step(-100.0) == 1e-6 * 100.0);
}

TEST_CASE("lipschitz estimation on known slopes") {
  Objective two_x("2x", [](double x) { return 2.0 * x; });
  const auto est = estimate_lipschitz(two_x, Interval(0.0, 1.0), 100, 1.0);
  CHECK(est.k_hat == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(est.samples == 100);

  Objective c("const", [](double) { return 3.0; });
  CHECK(estimate_lipschitz(c, Interval(0.0, 1.0), 10, 1.5).k_hat == 0.0);

  CHECK_THROWS_AS(estimate_lipschitz(c, Interval(0.0, 1.0), 1, 1.0), InvalidConfigError);
  CHECK_THROWS_AS(estimate_lipschitz(c, Interval(0.0, 1.0), 10, 0.5), InvalidConfigError);
}

TEST_CASE("larger safety factor gives a strictly larger estimate") {
  Objective f("f1", bench_f1);
  const double k1 = estimate_lipschitz(f, Interval(0.0, 10.0), 1000, 1.0).k_hat;
  const double k2 = estimate_lipschitz(f, Interval(0.0, 10.0), 1000, 1.5).k_hat;
  REQUIRE(k1 > 0.0);
  CHECK(k2 > k1);
}

TEST_CASE("lipschitz estimate of f1 approaches the dense derivative maximum") {
  // reference: scan the analytic derivative on a 10^6-point grid
  double max_abs = 0.0;
  for (long long i = 0; i < 1000000; ++i) {
    const double x = 10.0 * static_cast<double>(i) / 999999.0;
    max_abs = std::max(max_abs, std::fabs(bench_f1_prime(x)));
  }
  CHECK(max_abs == doctest::Approx(fixtures::kMaxAbsDf1).epsilon(1e-9));

  Objective f("f1", bench_f1);
  const auto est = estimate_lipschitz(f, Interval(0.0, 10.0), 100000, 1.2);
  CHECK(std::fabs(est.k_hat - 1.2 * max_abs) <= 1e-3 * max_abs);
}
