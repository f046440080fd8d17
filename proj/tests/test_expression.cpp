#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "wronsk/expression.hpp"

using wronsk::Expr;
using wronsk::ExprPtr;
using wronsk::parse_expression;

namespace {

double eval(const std::string& src, double x) {
  return parse_expression(src)->eval(x);
}

}  // namespace

TEST_CASE("expression: literals, variable, arithmetic") {
  CHECK(eval("2.5", 0.0) == 2.5);
  CHECK(eval("x", 3.25) == 3.25);
  CHECK(eval("1+2*3", 0.0) == 7.0);
  CHECK(eval("(1+2)*3", 0.0) == 9.0);
  CHECK(eval("7/2", 0.0) == 3.5);
  CHECK(eval("1 - 2 - 3", 0.0) == -4.0);  // left associative
  CHECK(eval("8/4/2", 0.0) == 1.0);
  CHECK(eval("1e-3", 0.0) == 1e-3);
  CHECK(eval("2.5E2", 0.0) == 250.0);
}

TEST_CASE("expression: power is right-associative, unary minus binds looser") {
  CHECK(eval("2^3^2", 0.0) == 512.0);     // 2^(3^2)
  CHECK(eval("-x^2", 3.0) == -9.0);       // -(x^2)
  CHECK(eval("(-x)^2", 3.0) == 9.0);
  CHECK(eval("2^-2", 0.0) == 0.25);       // exponent may carry a sign
  CHECK(eval("-2^-2", 0.0) == -0.25);
  CHECK(eval("--x", 4.0) == 4.0);
}

TEST_CASE("expression: function set") {
  CHECK(eval("exp(0)", 0.0) == 1.0);
  CHECK(eval("cosh(0)", 0.0) == 1.0);
  CHECK(eval("sinh(0)", 0.0) == 0.0);
  CHECK(eval("tanh(0)", 0.0) == 0.0);
  CHECK(eval("sech(0)", 0.0) == 1.0);
  CHECK(eval("abs(-3)", 0.0) == 3.0);
  CHECK_THAT(eval("sech(x)", 1.3), Catch::Matchers::WithinRel(1.0 / std::cosh(1.3), 1e-15));
  CHECK_THAT(eval("exp(-x^2)", 1.5), Catch::Matchers::WithinRel(std::exp(-2.25), 1e-15));
}

TEST_CASE("expression: whitespace is insignificant") {
  CHECK(eval("  - 5 * exp ( - x ^ 2 )  ", 0.0) == -5.0);
}

TEST_CASE("expression: syntax errors carry a position") {
  using wronsk::ParseError;
  CHECK_THROWS_AS(parse_expression("1+"), ParseError);
  CHECK_THROWS_AS(parse_expression("(1+2"), ParseError);
  CHECK_THROWS_AS(parse_expression("foo(1)"), ParseError);
  CHECK_THROWS_AS(parse_expression("1+2)"), ParseError);
  CHECK_THROWS_AS(parse_expression("cosh 3"), ParseError);
  CHECK_THROWS_AS(parse_expression(""), ParseError);
  CHECK_THROWS_AS(parse_expression("x y"), ParseError);
  try {
    parse_expression("1+*2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    parse_expression("2*foo");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

namespace {

// random AST for the round-trip property
ExprPtr random_expr(std::mt19937& rng, int depth) {
  auto node = std::make_unique<Expr>();
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0: {
      node->kind = Expr::Kind::Number;
      std::uniform_real_distribution<double> num(-5.0, 5.0);
      node->number = num(rng);
      return node;
    }
    case 1:
      node->kind = Expr::Kind::Var;
      return node;
    case 2:
      node->kind = Expr::Kind::Neg;
      node->a = random_expr(rng, depth - 1);
      return node;
    case 3:
    case 4:
    case 5: {
      node->kind = pick(rng) % 2 ? Expr::Kind::Add : Expr::Kind::Sub;
      if (pick(rng) % 3 == 0) node->kind = Expr::Kind::Mul;
      node->a = random_expr(rng, depth - 1);
      node->b = random_expr(rng, depth - 1);
      return node;
    }
    case 6: {
      node->kind = Expr::Kind::Func;
      const char* names[] = {"exp", "cosh", "sinh", "tanh", "sech", "abs"};
      node->func = names[pick(rng) % 6];
      node->a = random_expr(rng, depth - 1);
      return node;
    }
    default: {
      // keep powers benign: positive base via abs, small integer exponent
      node->kind = Expr::Kind::Pow;
      auto base = std::make_unique<Expr>();
      base->kind = Expr::Kind::Func;
      base->func = "abs";
      base->a = random_expr(rng, depth - 1);
      node->a = std::move(base);
      node->b = std::make_unique<Expr>();
      node->b->kind = Expr::Kind::Number;
      node->b->number = static_cast<double>(pick(rng) % 3 + 1);
      return node;
    }
  }
}

}  // namespace

TEST_CASE("expression: print/parse round-trip preserves evaluation") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const auto tree = random_expr(rng, 4);
    const std::string printed = tree->str();
    const auto reparsed = parse_expression(printed);
    for (double x : {-3.7, -1.0, 0.0, 0.31, 2.0, 9.5}) {
      const double a = tree->eval(x);
      const double b = reparsed->eval(x);
      if (std::isnan(a)) {
        CHECK(std::isnan(b));
      } else {
        INFO(printed << " at x=" << x);
        CHECK(a == b);  // same AST, bitwise-equal numbers via %.17g
      }
    }
  }
}
