#include <catch_amalgamated.hpp>

#include "superint/errors.hpp"
#include "superint/models.hpp"
#include "test_support.hpp"

using namespace superint;
using testing::applyTo;
using testing::Gen;

namespace {

const Expression I = Expression::i();
const Expression HBAR = Expression::hbar();

WeylOperator hq() { return std::get<WeylOperator>(modelSystem(Flavor::Quantum).get("H")); }
WeylOperator xq() { return std::get<WeylOperator>(modelSystem(Flavor::Quantum).get("X")); }
WeylOperator yq() { return std::get<WeylOperator>(modelSystem(Flavor::Quantum).get("Y")); }

WeylOperator scalar(const Expression& e) { return WeylOperator(e); }
WeylOperator p1() { return WeylOperator::p1(); }
WeylOperator p2() { return WeylOperator::p2(); }
WeylOperator dx() { return WeylOperator::term(1, 1, 0); }

Expression c(long num, long den = 1) { return Expression(Rational(num, den)); }

}  // namespace

TEST_CASE("composition examples") {
  const WeylOperator x(Expression::x());
  CHECK(dx() * x == WeylOperator::term(Expression::x(), 1, 0) + WeylOperator(1));
  CHECK(p1() * x - x * p1() == scalar(-I * HBAR));
  CHECK(commutator(hq(), xq()).isZero());
}

TEST_CASE("composition acts as operator product on functions") {
  Gen gen(41);
  for (int t = 0; t < 60; ++t) {
    const WeylOperator a = gen.weylOperator(), b = gen.weylOperator();
    const Expression f = gen.expression(3, true, false);
    CHECK(applyTo(a * b, f) == applyTo(a, applyTo(b, f)));
  }
}

TEST_CASE("associativity, bilinearity, self-commutator") {
  Gen gen(43);
  for (int t = 0; t < 40; ++t) {
    const WeylOperator a = gen.weylOperator(), b = gen.weylOperator(), d = gen.weylOperator();
    CHECK((a * b) * d == a * (b * d));
    CHECK(commutator(a, a).isZero());
    CHECK(commutator(a + b, d) == commutator(a, d) + commutator(b, d));
    CHECK(commutator(a, b) == -commutator(b, a));
  }
}

TEST_CASE("adjoint is an involutive anti-homomorphism") {
  Gen gen(47);
  for (int t = 0; t < 40; ++t) {
    const WeylOperator a = gen.weylOperator(), b = gen.weylOperator();
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
    CHECK(transpose(transpose(a)) == a);
  }
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(p1()) == p1());
  const Expression cube = Expression::x(Rational(1, 3));
  const WeylOperator op = WeylOperator::term(cube, 1, 0);
  CHECK(adjoint(op) == WeylOperator::term(-cube, 1, 0) - scalar(c(1, 3) * Expression::x(Rational(-2, 3))));
  CHECK((adjoint(xq()) - xq()).isZero());
  CHECK((adjoint(yq()) - yq()).isZero());
  CHECK(adjoint(hq()) == hq());
}

TEST_CASE("symmetrize examples") {
  CHECK(symmetrize(1, 0, 1) == p2());
  const Expression cube = Expression::x(Rational(1, 3));
  CHECK(symmetrize(cube, 1, 0) == scalar(cube) * p1() - scalar(c(1, 6) * I * HBAR * Expression::x(Rational(-2, 3))));
  Gen gen(53);
  for (int t = 0; t < 20; ++t) {
    const Expression g = gen.expression(3, true, true, false);
    const WeylOperator s = symmetrize(g, static_cast<unsigned>(gen.integer(0, 3)), static_cast<unsigned>(gen.integer(0, 2)));
    CHECK(adjoint(s) == s);
  }
}

TEST_CASE("self-adjoint and parity parts") {
  CHECK(selfAdjointPart(scalar(c(3) * I)).isZero());
  const ParityComponents px = parityComponents(xq());
  CHECK(px.odd == xq());
  CHECK(px.even.isZero());
  const ParityComponents py = parityComponents(yq());
  CHECK(py.even == yq());
  CHECK(py.odd.isZero());
  Gen gen(59);
  for (int t = 0; t < 40; ++t) {
    const WeylOperator a = gen.weylOperator();
    const ParityComponents parts = parityComponents(a);
    CHECK(parts.even + parts.odd == a);
    CHECK(transpose(parts.even) == parts.even);
    CHECK(transpose(parts.odd) == -parts.odd);
    CHECK(selfAdjointPart(a) + skewAdjointPart(a) == a);
    CHECK(adjoint(selfAdjointPart(a)) == selfAdjointPart(a));
  }
}

TEST_CASE("commutator identities with cubic momenta") {
  Gen gen(61);
  std::vector<Expression> functions{Expression::x(2) * Expression::y(3)};
  for (int t = 0; t < 3; ++t)
    functions.push_back(Expression::monomial(gen.coefficient(false), gen.key(true, true)));
  const auto anti = [](const Expression& g, const WeylOperator& m) { return anticommutator(scalar(g), m); };
  const WeylOperator p1sq = p1() * p1(), p2sq = p2() * p2(), p1p2 = p1() * p2();
  const Expression ih = I * HBAR, ih3 = I * Expression::hbar(3);

  for (const Expression& f : functions) {
    INFO("f = " << f);
    const WeylOperator F(f);
    const Expression fx = diff(f, Variable::X), fy = diff(f, Variable::Y);
    CHECK(commutator(F, p1()) == scalar(ih * fx));
    CHECK(commutator(F, p2()) == scalar(ih * fy));

    const WeylOperator raw3 = WeylOperator(ih3) * (scalar(-diff(f, 3, 0)) - WeylOperator::term(c(3) * diff(f, 2, 0), 1, 0) -
                                                 WeylOperator::term(c(3) * fx, 2, 0));
    CHECK(commutator(F, p1() * p1() * p1()) == raw3);
    CHECK(commutator(F, p1() * p1() * p1()) == scalar(c(1, 2) * ih3 * diff(f, 3, 0)) + WeylOperator(c(3, 2) * ih) * anti(fx, p1sq));

    const WeylOperator raw21 =
        WeylOperator(ih3) * (scalar(-diff(f, 2, 1)) - WeylOperator::term(c(2) * diff(f, 1, 1), 1, 0) -
                             WeylOperator::term(diff(f, 2, 0), 0, 1) - WeylOperator::term(c(2) * fx, 1, 1) -
                             WeylOperator::term(fy, 2, 0));
    CHECK(commutator(F, p1sq * p2()) == raw21);
    CHECK(commutator(F, p1sq * p2()) == WeylOperator(c(1, 2) * ih) * anti(fy, p1sq) + WeylOperator(ih) * anti(fx, p1p2) +
                                           scalar(c(1, 2) * ih3 * diff(f, 2, 1)));
    CHECK(commutator(F, p1() * p2sq) == WeylOperator(c(1, 2) * ih) * anti(fx, p2sq) + WeylOperator(ih) * anti(fy, p1p2) +
                                           scalar(c(1, 2) * ih3 * diff(f, 1, 2)));
    CHECK(commutator(F, p2sq * p2()) == scalar(c(1, 2) * ih3 * diff(f, 0, 3)) + WeylOperator(c(3, 2) * ih) * anti(fy, p2sq));
  }
}

TEST_CASE("symmetrize is half the anticommutator") {
  const Expression f = Expression::x(2) * Expression::y(3);
  CHECK(symmetrize(f, 2, 0) + symmetrize(f, 2, 0) == anticommutator(scalar(f), p1() * p1()));
}

TEST_CASE("classical limit") {
  const SystemSpec classical = modelSystem(Flavor::Classical);
  CHECK(classicalLimit(xq()) == std::get<PhasePolynomial>(classical.get("X")));
  CHECK(classicalLimit(yq()) == std::get<PhasePolynomial>(classical.get("Y")));
  CHECK(classicalLimit(hq()) == std::get<PhasePolynomial>(classical.get("H")));
  const Expression f = Expression::alpha() * Expression::x(Rational(1, 3)) * Expression::y();
  CHECK(classicalLimit(symmetrize(f, 1, 0)) == PhasePolynomial::term(f, 1, 0));
  CHECK_THROWS_AS(classicalLimit(dx()), AlgebraError);
}

TEST_CASE("semiclassical bracket matches the Poisson bracket") {
  CHECK(semiclassicalBracket(hq(), xq()).isZero());
  CHECK(semiclassicalBracket(hq(), yq()).isZero());
  Gen gen(67);
  for (int t = 0; t < 30; ++t) {
    const Expression f = gen.expression(2, true, false, false), g = gen.expression(2, true, false, false);
    const unsigned k1 = static_cast<unsigned>(gen.integer(0, 2)), l1 = static_cast<unsigned>(gen.integer(0, 2));
    const unsigned k2 = static_cast<unsigned>(gen.integer(0, 2)), l2 = static_cast<unsigned>(gen.integer(0, 2));
    const WeylOperator a = symmetrize(f, k1, l1), b = symmetrize(g, k2, l2);
    CHECK(semiclassicalBracket(a, b) == poissonBracket(classicalLimit(a), classicalLimit(b)));
  }
}

TEST_CASE("quantum algebra constant") {
  const auto s = commutator(xq(), yq()).asScalar();
  REQUIRE(s.has_value());
  CHECK(*s == c(108) * I * HBAR * Expression::alpha(3));
}

TEST_CASE("symmetrized printing mirrors the momentum notation") {
  CHECK(symmetrizedString(xq()) ==
        "3*p1^2*p2 + 2*p2^3 + {9/2*alpha*x^(1/3), p1} + {-5/24*hbar^2*x^(-2) + 3*alpha*x^(-2/3)*y, p2}");
  CHECK(parseWeylOperator(symmetrizedString(xq())) == xq());
  CHECK(parseWeylOperator(symmetrizedString(yq())) == yq());
  CHECK(p1().str() == "-i*hbar*dx");
}
