#include <catch_amalgamated.hpp>

#include "superint/errors.hpp"
#include "superint/parser.hpp"
#include "superint/phase_polynomial.hpp"
#include "superint/weyl_operator.hpp"

using namespace superint;

namespace {

std::size_t errorPosition(std::string_view text) {
  try {
    parseExpression(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("exponent forms") {
  CHECK(parseExpression("x^2") == Expression::x(2));
  CHECK(parseExpression("x^-2") == Expression::x(-2));
  CHECK(parseExpression("x^(-2/3)") == Expression::x(Rational(-2, 3)));
  CHECK(parseExpression("x^(4/6)") == Expression::x(Rational(2, 3)));
  CHECK(parseExpression("(2*x)^2") == parseExpression("4*x^2"));
}

TEST_CASE("precedence and unary minus") {
  CHECK(parseExpression("-x^2") == -Expression::x(2));
  CHECK(parseExpression("1 - 2*3") == Expression(-5));
  CHECK(parseExpression("2/3*x") == Expression(Rational(2, 3)) * Expression::x());
  CHECK(parseExpression("x/2/2") == Expression(Rational(1, 4)) * Expression::x());
}

TEST_CASE("syntax errors report a position") {
  CHECK(errorPosition("x +") == 3);
  CHECK(errorPosition("x * (y") == 6);
  CHECK(errorPosition("2 $ x") == 2);
  CHECK(errorPosition("z") == 0);
  CHECK_THROWS_AS(parseExpression("x^(1/0)"), ParseError);
  CHECK_THROWS_AS(parseExpression("1/0"), ParseError);
  CHECK_THROWS_AS(parseExpression("x/(x+1)"), ParseError);
  CHECK_THROWS_AS(parseExpression("x^y"), ParseError);
}

TEST_CASE("phase-space atoms and the anticommutator") {
  const PhasePolynomial p = parsePhasePolynomial("{x, p1} + p2^2");
  CHECK(p == PhasePolynomial::term(Expression(2) * Expression::x(), 1, 0) + PhasePolynomial::term(1, 0, 2));
  CHECK_THROWS_AS(parseExpression("p1"), ParseError);
  CHECK_THROWS_AS(parsePhasePolynomial("dx"), ParseError);
  CHECK_THROWS_AS(parsePhasePolynomial("x/p1"), ParseError);
}

TEST_CASE("operator atoms") {
  CHECK(parseWeylOperator("p1") == WeylOperator::term(-Expression::i() * Expression::hbar(), 1, 0));
  CHECK(parseWeylOperator("dx*x") == WeylOperator::term(Expression::x(), 1, 0) + WeylOperator(1));
  CHECK(parseWeylOperator("{x, dx}") == WeylOperator::term(Expression(2) * Expression::x(), 1, 0) + WeylOperator(1));
  CHECK_THROWS_AS(parseWeylOperator("dx^(1/2)"), ParseError);
}
