#include "doctest.h"

#include <random>

#include "fakepoly/polyexpr.hpp"
#include "oracles.hpp"

using namespace fakepoly;

namespace {

PolyExpr x(std::size_t i) { return PolyExpr::variable(i); }

}  // namespace

TEST_CASE("arith: cancellation, products, scaling") {
  PolyExpr zero = x(0) + (-x(0));
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());

  CHECK((x(0) + 1) * (x(0) - 1) == x(0).pow(2) - 1);
  auto half = scale(x(0).pow(2), Rational(1, 2));
  CHECK(half.coefficient(Monomial::variable(0, 2)) == Rational(1, 2));
  CHECK(half.size() == 1);
  CHECK((x(0) * Rational(0)).is_zero());
}

TEST_CASE("evaluate") {
  PolyExpr f = x(0).pow(3) + x(1).pow(3);
  CHECK(evaluate(f, GroupElement{1, 2}) == 9);
  PolyExpr g = x(0) * x(1) + x(2) * Rational(3) + Rational(-7, 2);
  CHECK(evaluate(g, GroupElement{}) == g.constant_term());
  CHECK(evaluate(PolyExpr{}, GroupElement{4, -5}) == 0);
}

TEST_CASE("total_degree") {
  CHECK(total_degree(x(0).pow(2) * x(1)) == 3u);
  CHECK(total_degree(PolyExpr(5)) == 0u);
  CHECK_FALSE(total_degree(PolyExpr{}).has_value());
}

TEST_CASE("homogeneous_part") {
  PolyExpr cube = (x(0) + 1).pow(3);
  CHECK(homogeneous_part(cube, 2) == x(0).pow(2) * Rational(3));
  CHECK(homogeneous_part(cube, 4).is_zero());
  CHECK(homogeneous_part(x(0) * x(1) + x(0), 2) == x(0) * x(1));
}

TEST_CASE("shift_expand examples") {
  auto square = shift_expand(x(0).pow(2));
  REQUIRE(square.size() == 3);
  CHECK(square[0].beta.is_one());
  CHECK(square[0].coefficient == x(0).pow(2));
  CHECK(square[1].beta == Monomial::variable(0, 1));
  CHECK(square[1].coefficient == x(0) * Rational(2));
  CHECK(square[2].beta == Monomial::variable(0, 2));
  CHECK(square[2].coefficient == PolyExpr(1));

  auto cube = shift_expand(x(0).pow(3));
  REQUIRE(cube.size() == 4);
  CHECK(cube[1].coefficient == x(0).pow(2) * Rational(3));
  CHECK(cube[2].coefficient == x(0) * Rational(3));
  CHECK(cube[3].coefficient == PolyExpr(1));

  auto constant = shift_expand(PolyExpr(Rational(3, 4)));
  REQUIRE(constant.size() == 1);
  CHECK(constant[0].coefficient == PolyExpr(Rational(3, 4)));
}

TEST_CASE("canonical rendering") {
  PolyExpr f = x(0).pow(2) * Rational(3) + x(0) * Rational(3) + x(1).pow(2) * Rational(3) + x(1) * Rational(3) + 2;
  CHECK(f.render() == "3*x1^2 + 3*x2^2 + 3*x1 + 3*x2 + 2");
  CHECK(PolyExpr{}.render() == "0");
  CHECK((x(0) * Rational(-1, 2) + x(1).pow(2) * x(0)).render() == "x1*x2^2 - 1/2*x1");
  CHECK((-x(2)).render() == "-x3");
}

TEST_CASE("graded lex order") {
  GradedLexLess less;
  CHECK(less(Monomial::variable(1), Monomial::variable(0)));
  CHECK(less(Monomial::variable(0), Monomial::variable(1, 2)));
  CHECK(less(Monomial::variable(0) * Monomial::variable(1), Monomial::variable(0, 2)));
  CHECK_FALSE(less(Monomial::variable(0), Monomial::variable(0)));
}

TEST_CASE("property: shift_expand reassembles q(t + s)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t vars = 1 + rng() % 4;
    PolyExpr q = oracle::random_polynomial(rng, vars, 6, 7);
    const auto family = shift_expand(q);

    // Doubled variable set: t in 0..3, s in 4..7.
    PolyExpr joint;
    for (const auto& term : family) {
      PolyExpr s_beta(1);
      for (const auto& [var, e] : term.beta.entries()) s_beta = s_beta * PolyExpr::variable(var + 4).pow(e);
      joint += s_beta * term.coefficient;
    }
    auto s_zero = joint.filter_variables([](std::size_t v) { return v < 4; });
    CHECK(s_zero == q);
    auto t_zero = joint.filter_variables([](std::size_t v) { return v >= 4; });
    CHECK(t_zero.rename([](std::size_t v) { return v - 4; }) == q);

    for (int k = 0; k < 20; ++k) {
      GroupElement s0 = oracle::random_point(rng, vars, 4);
      PolyExpr combo;
      for (const auto& term : family) {
        combo += term.coefficient * evaluate(PolyExpr::term(term.beta, 1), s0);
      }
      CHECK((q.translate(s0) - combo).is_zero());
    }
  }
}

TEST_CASE("property: homogeneous parts partition p") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    PolyExpr p = oracle::random_polynomial(rng, 3, 6, 8);
    PolyExpr sum;
    std::size_t terms = 0;
    for (unsigned k = 0; k <= 6; ++k) {
      auto part = homogeneous_part(p, k);
      terms += part.size();
      sum += part;
    }
    CHECK(sum == p);
    CHECK(terms == p.size());
  }
}

TEST_CASE("substitute and translate agree with evaluation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    PolyExpr p = oracle::random_polynomial(rng, 3, 4, 6);
    GroupElement s = oracle::random_point(rng, 3);
    GroupElement at = oracle::random_point(rng, 3);
    CHECK(p.translate(s).evaluate(at) == p.evaluate(at + s));
  }
}
