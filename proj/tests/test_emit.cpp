#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <random>

#include "doctest.h"
#include "lipopt/benchfns.hpp"
#include "lipopt/emit.hpp"
#include "lipopt/errors.hpp"
#include "lipopt/sugd.hpp"

using namespace lipopt;

namespace {

bool same_bits(double a, double b) {
  std::uint64_t ua, ub;
  std::memcpy(&ua, &a, 8);
  std::memcpy(&ub, &b, 8);
  return ua == ub || (std::isnan(a) && std::isnan(b));
}

ExperimentReport sample_report() {
  ExperimentReport r;
  r.function = "f1";
  r.domain_lo = 0.0;
  r.domain_hi = 10.0;
  r.oracle = {10.0, -5.440211108893697, 1000000, true};

  AlgorithmResult sugd;
  sugd.label = "sugd";
  sugd.kind = "sugd";
  sugd.x_min = 9.99999989946385;
  sugd.f_min = -5.440210210629679;
  sugd.gap = 8.98263e-07;
  sugd.iters = 2454;
  sugd.evals = 2456;
  sugd.termination = "tolerance_met";
  sugd.converged = true;
  sugd.x_best_seen = 10.0;
  sugd.f_best_seen = -5.440211108893697;
  sugd.alpha = 1e-3;
  r.algorithms.push_back(sugd);

  AlgorithmResult gd;
  gd.label = "gd";
  gd.kind = "gd";
  gd.x_min = 4.99e-09;
  gd.f_min = 2.49e-17;
  gd.gap = 5.44021110889;
  gd.iters = 956;
  gd.evals = 2871;
  gd.termination = "grad_tol";
  gd.x0 = 1.0;
  gd.lr = 0.01;
  r.algorithms.push_back(gd);

  AlgorithmResult bad;
  bad.label = "nag";
  bad.kind = "nag";
  bad.error = "x0 = 99.0 outside the search domain";
  r.algorithms.push_back(bad);
  return r;
}

}  // namespace

TEST_CASE("format_double survives the round trip for random doubles") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> exp_dist(-300, 300);
  for (int i = 0; i < 10000; ++i) {
    const double v = std::ldexp(u(rng), exp_dist(rng) % 60);
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("a three-step bracket trace serializes to four data rows") {
  Objective c("const", [](double) { return 4.0; });
  SuGDConfig cfg;
  cfg.alpha = 0.1;
  cfg.tol = 0.73;  // width path 1, .9, .81, .729: three steps
  const auto run = sugd_run(c, Interval(0.0, 1.0), cfg);
  REQUIRE(run.result.iters == 3);
  const std::string csv = trace_to_csv(run.trace);
  CHECK(csv.rfind("iter,x1,x2,f_x1,f_x2,width_metric\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 5);  // header + 4 records
}

TEST_CASE("bracket trace csv round-trips bitwise") {
  Objective f("f1", bench_f1);
  SuGDConfig cfg;
  cfg.alpha = 1e-3;
  cfg.tol = 1e-3;
  const auto run = sugd_run(f, Interval(0.0, 10.0), cfg);
  const auto back = bracket_trace_from_csv(trace_to_csv(run.trace));
  REQUIRE(back.records.size() == run.trace.records.size());
  for (std::size_t i = 0; i < back.records.size(); ++i) {
    CHECK(back.records[i].iter == run.trace.records[i].iter);
    CHECK(same_bits(back.records[i].x1, run.trace.records[i].x1));
    CHECK(same_bits(back.records[i].x2, run.trace.records[i].x2));
    CHECK(same_bits(back.records[i].f1, run.trace.records[i].f1));
    CHECK(same_bits(back.records[i].f2, run.trace.records[i].f2));
    CHECK(same_bits(back.records[i].width_metric, run.trace.records[i].width_metric));
  }
}

TEST_CASE("point trace csv round-trips, including nan gradients") {
  PointTrace t;
  t.records.push_back({0, 0.5, -0.25, 1.75, 3});
  t.records.push_back({1, 0.675, -0.3, std::numeric_limits<double>::quiet_NaN(), 4});
  const auto back = point_trace_from_csv(trace_to_csv(t));
  REQUIRE(back.records.size() == 2);
  CHECK(same_bits(back.records[1].grad, t.records[1].grad));
  CHECK(back.records[1].evals == 4);

  CHECK_THROWS_AS(point_trace_from_csv("bogus\n1,2\n"), InvalidConfigError);
  CHECK_THROWS_AS(point_trace_from_csv("iter,x,f_x,grad,evals\n1,2\n"), InvalidConfigError);
}

TEST_CASE("report json round-trips and is byte-stable") {
  const ExperimentReport r = sample_report();
  const std::string a = report_to_json(r);
  const std::string b = report_to_json(r);
  CHECK(a == b);

  const ExperimentReport back = report_from_json(a);
  CHECK(reports_equivalent(r, back));
  CHECK(report_to_json(back) == a);  // parse/serialize is idempotent

  ExperimentReport tweaked = back;
  tweaked.algorithms[0].iters += 1;
  CHECK(!reports_equivalent(r, tweaked));

  CHECK_THROWS_AS(report_from_json("{"), InvalidConfigError);
  CHECK_THROWS_AS(report_from_json("{\"function\": 3}"), InvalidConfigError);
}

TEST_CASE("failed algorithms keep NaN metrics through json") {
  const ExperimentReport r = sample_report();
  const ExperimentReport back = report_from_json(report_to_json(r));
  CHECK(back.algorithms[2].error == r.algorithms[2].error);
  CHECK(std::isnan(back.algorithms[2].x_min));
  CHECK(std::isnan(back.algorithms[2].gap));
}

TEST_CASE("the table sorts by gap and pushes failures to the bottom") {
  const std::string table = render_table(sample_report());
  CHECK(table.find("algorithm") != std::string::npos);
  const auto sugd_pos = table.find("sugd");
  const auto gd_pos = table.find("gd ");
  const auto nag_pos = table.find("nag");
  REQUIRE(sugd_pos != std::string::npos);
  REQUIRE(gd_pos != std::string::npos);
  REQUIRE(nag_pos != std::string::npos);
  CHECK(sugd_pos < gd_pos);
  CHECK(gd_pos < nag_pos);
  CHECK(table.find("error:") != std::string::npos);
}

TEST_CASE("svg output is deterministic and well-formed") {
  Objective f("f1", bench_f1);
  SuGDConfig cfg;
  cfg.alpha = 1e-3;
  cfg.tol = 1e-3;
  const auto run = sugd_run(f, Interval(0.0, 10.0), cfg);
  std::vector<NamedTrace> traces;
  traces.push_back({"sugd", run.trace});

  const ExperimentReport r = sample_report();
  const Interval dom(0.0, 10.0);
  const std::string svg = render_plot_svg(r, traces, f, dom);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg == render_plot_svg(r, traces, f, dom));
}
