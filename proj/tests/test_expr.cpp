#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "lipopt/benchfns.hpp"
#include "lipopt/errors.hpp"
#include "lipopt/expr.hpp"

using namespace lipopt;

TEST_CASE("basic expressions evaluate") {
  CHECK(parse_expression("x*sin(x)").eval(2.0) == doctest::Approx(2.0 * std::sin(2.0)));
  CHECK(parse_expression("1+2*3").eval(0.0) == 7.0);
  CHECK(parse_expression("(1+2)*3").eval(0.0) == 9.0);
  CHECK(parse_expression("2*x+1").eval(3.0) == 7.0);
  CHECK(parse_expression("10/4").eval(0.0) == 2.5);
  CHECK(parse_expression("  1 +  x ").eval(1.5) == 2.5);
  CHECK(parse_expression("1.5e2").eval(0.0) == 150.0);
  CHECK(parse_expression("pi").eval(0.0) == doctest::Approx(3.14159265358979));
  CHECK(parse_expression("e").eval(0.0) == doctest::Approx(2.71828182845905));
  CHECK(parse_expression("abs(-3)").eval(0.0) == 3.0);
  CHECK(parse_expression("sqrt(x)").eval(9.0) == 3.0);
  CHECK(parse_expression("log(e)").eval(0.0) == doctest::Approx(1.0));
  CHECK(parse_expression("cos(0)").eval(0.0) == 1.0);
  CHECK(parse_expression("tan(0)").eval(0.0) == 0.0);
}

TEST_CASE("power is right-associative and binds tighter than unary minus") {
  CHECK(parse_expression("-x^2").eval(3.0) == -9.0);
  CHECK(parse_expression("x^2^3").eval(2.0) == 256.0);  // 2^(2^3)
  CHECK(parse_expression("2^-3").eval(0.0) == 0.125);
  CHECK(parse_expression("(-x)^2").eval(3.0) == 9.0);
}

TEST_CASE("domain errors become non-finite values, not exceptions") {
  CHECK(std::isnan(parse_expression("log(x)").eval(-1.0)));
  CHECK(std::isnan(parse_expression("sqrt(x)").eval(-4.0)));
  CHECK(std::isinf(parse_expression("1/x").eval(0.0)));
}

TEST_CASE("implicit multiplication is a syntax error") {
  try {
    parse_expression("2x");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 1);
  }
}

TEST_CASE("unknown identifiers are their own error") {
  CHECK_THROWS_AS(parse_expression("foo(x)"), UnknownIdentifierError);
  CHECK_THROWS_AS(parse_expression("y"), UnknownIdentifierError);
  CHECK_THROWS_AS(parse_expression("x + nope"), UnknownIdentifierError);
}

TEST_CASE("malformed inputs report an offset within bounds") {
  for (const char* bad : {"", "(", "1+", "sin", "sin x", ")", "*3", "1,2", "x!", "((x)"}) {
    const std::string input(bad);
    try {
      parse_expression(input);
      FAIL("expected SyntaxError for: ", input);
    } catch (const SyntaxError& e) {
      CHECK(e.offset <= input.size());
      CHECK(!e.expected.empty());
    }
  }
}

TEST_CASE("parsed x*sin(x) matches the registry landscape") {
  const ExprAst ast = parse_expression("x*sin(x)");
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    CHECK(std::fabs(ast.eval(x) - bench_f1(x)) <= 1e-15);
  }
}

TEST_CASE("expression objectives carry their source as the name") {
  const Objective f = parse_expression("x^2").to_objective();
  CHECK(f.name() == "x^2");
  CHECK(f(3.0) == 9.0);
  CHECK(f.eval_count() == 1);
}

TEST_CASE("fuzzing random byte strings never crashes the parser") {
  std::mt19937 rng(12345);
  const std::string charset = "xe0123456789.+-*/^()sincotaqrlgbp _,!@#";
  std::uniform_int_distribution<int> len_dist(0, 24);
  std::uniform_int_distribution<int> mode_dist(0, 3);
  std::uniform_int_distribution<int> char_dist(0, static_cast<int>(charset.size()) - 1);
  std::uniform_int_distribution<int> byte_dist(0, 255);

  int parsed = 0, rejected = 0;
  for (int i = 0; i < 100000; ++i) {
    std::string input;
    const int len = len_dist(rng);
    const bool raw_bytes = mode_dist(rng) == 0;
    for (int j = 0; j < len; ++j)
      input += raw_bytes ? static_cast<char>(byte_dist(rng)) : charset[char_dist(rng)];
    try {
      parse_expression(input);
      ++parsed;
    } catch (const SyntaxError& e) {
      CHECK(e.offset <= input.size());
      ++rejected;
    } catch (const UnknownIdentifierError& e) {
      CHECK(e.offset <= input.size());
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 100000);
  CHECK(parsed > 0);  // the charset does produce valid expressions
}
