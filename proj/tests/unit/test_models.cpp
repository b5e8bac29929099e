#include <catch_amalgamated.hpp>

#include "superint/models.hpp"
#include "superint/parser.hpp"
#include "test_support.hpp"

using namespace superint;

namespace {

const Expression ALPHA = Expression::alpha();

bool hasStatus(const VerificationReport& r, const std::string& id, CheckStatus s) {
  const CheckResult* c = r.find(id);
  return c != nullptr && c->status == s;
}

}  // namespace

TEST_CASE("model systems") {
  const SystemSpec q = modelSystem(Flavor::Quantum);
  const SystemSpec c = modelSystem(Flavor::Classical);
  CHECK(q.potential == parseExpression("alpha*y*x^(-2/3) - 5/72*hbar^2*x^(-2)"));
  CHECK(c.potential == parseExpression("alpha*y*x^(-2/3)"));
  CHECK(evalNumeric(substituteHbarZero(q.potential), 1, 1, 1, 0).real() == Catch::Approx(1.0));
  CHECK(std::get<WeylOperator>(q.get("X")) ==
        parseWeylOperator("3*p1^2*p2 + 2*p2^3 + {9/2*alpha*x^(1/3), p1} + {3*alpha*y*x^(-2/3) - 5/24*hbar^2*x^(-2), p2}"));
  CHECK(std::get<WeylOperator>(q.get("Y")) ==
        parseWeylOperator("p1^4 + {2*alpha*y*x^(-2/3) - 5/36*hbar^2*x^(-2), p1^2} - {6*alpha*x^(1/3), p1*p2}"
                          " - 2*alpha^2*(9*x^2 - 2*y^2)*x^(-4/3) - 5/9*alpha*hbar^2*y*x^(-8/3) + 25/1296*hbar^4*x^(-4)"));
  CHECK(std::get<PhasePolynomial>(c.get("Y")) ==
        parsePhasePolynomial("p1^4 + 4*alpha*y*x^(-2/3)*p1^2 - 12*alpha*x^(1/3)*p1*p2 + 4*alpha^2*y^2*x^(-4/3) - 18*alpha^2*x^(2/3)"));
  for (const auto& m : q.integrals) CHECK(adjoint(std::get<WeylOperator>(m.value)) == std::get<WeylOperator>(m.value));
  for (const auto& m : c.integrals) CHECK(std::get<PhasePolynomial>(m.value).isClassicalReal());
  CHECK_THROWS_AS(q.get("Z"), std::out_of_range);
}

TEST_CASE("classical limit of the quantum system, member by member") {
  const SystemSpec limit = classicalLimit(modelSystem(Flavor::Quantum));
  const SystemSpec c = modelSystem(Flavor::Classical);
  CHECK(limit.potential == c.potential);
  for (const char* name : {"H", "X", "Y"})
    CHECK(std::get<PhasePolynomial>(limit.get(name)) == std::get<PhasePolynomial>(c.get(name)));
  CHECK(verifyClassicalLimit(modelSystem(Flavor::Quantum), c).allPassed());
}

TEST_CASE("both theorem suites pass with exact zeros") {
  for (Flavor f : {Flavor::Classical, Flavor::Quantum}) {
    const VerificationReport r = verifyTheorem(modelSystem(f));
    INFO(r.toText());
    CHECK(r.allPassed());
    for (const CheckResult& c : r.checks()) {
      if (c.id.find(".commute.") != std::string::npos) {
        CHECK(c.residual.terms == 0);
        CHECK(c.residual.maxAtProbe == 0.0);
      }
    }
  }
  const VerificationReport c = verifyTheorem(modelSystem(Flavor::Classical));
  CHECK(c.find("classical.algebra.X.Y")->value == "108*alpha^3");
  CHECK(c.find("classical.rank.x=8")->value == "3");
  CHECK(c.find("classical.order2.admissible")->value == "{A020=1, A002=1}");
  const VerificationReport q = verifyTheorem(modelSystem(Flavor::Quantum));
  const SystemSpec qs = modelSystem(Flavor::Quantum);
  const WeylOperator& xq = std::get<WeylOperator>(qs.get("X"));
  const WeylOperator& yq = std::get<WeylOperator>(qs.get("Y"));
  CHECK(commutator(xq, yq).asScalar() == Expression(108) * Expression::i() * Expression::hbar() * ALPHA.pow(3));
  CHECK(hasStatus(q, "quantum.algebra.X.Y", CheckStatus::Pass));
  CHECK(hasStatus(q, "quantum.algebra.X.Y.limit", CheckStatus::Pass));
}

TEST_CASE("each hbar^2 correction is necessary") {
  const VerificationReport noV = verifyTheorem(modelSystem(Flavor::Quantum, {false, true}));
  CHECK(hasStatus(noV, "quantum-uncorrected.commute.H.X", CheckStatus::Fail));
  CHECK(noV.find("quantum-uncorrected.commute.H.X")->residual.terms > 0);
  const VerificationReport noX = verifyTheorem(modelSystem(Flavor::Quantum, {true, false}));
  CHECK(hasStatus(noX, "quantum-uncorrected.commute.H.X", CheckStatus::Fail));
  CHECK(hasStatus(noX, "quantum-uncorrected.commute.H.Y", CheckStatus::Pass));
}

TEST_CASE("free system passes commutation and fails independence") {
  SystemSpec s;
  s.name = "free";
  s.flavor = Flavor::Classical;
  s.integrals = {{"H", classicalHamiltonian(Expression())},
                 {"X", PhasePolynomial::p1()},
                 {"Y", PhasePolynomial::p1() * PhasePolynomial::p1()}};
  const VerificationReport r = verifyTheorem(s);
  CHECK(hasStatus(r, "free.commute.H.X", CheckStatus::Pass));
  CHECK(hasStatus(r, "free.commute.H.Y", CheckStatus::Pass));
  CHECK(hasStatus(r, "free.algebra.X.Y", CheckStatus::Recorded));
  for (const char* id : {"free.rank.x=1", "free.rank.x=8", "free.rank.x=27"}) {
    CHECK(hasStatus(r, id, CheckStatus::Fail));
    CHECK(r.find(id)->value == "2");
  }
  CHECK(r.failedIds().size() >= 3);
}

TEST_CASE("Drach suite") {
  const DrachResult reduced = drachSuite({0, 1, 0});
  CHECK(hasStatus(reduced.report, "drach.order3.admissible", CheckStatus::Pass));
  CHECK(reduced.thirdOrder.genuineDimension == 1);
  CHECK(reduced.report.allPassed());

  const DrachResult full = drachSuite({0, 1, 1});
  CHECK(inSpan(full.order4.basis, hamiltonianPowerLeading(4)));
  CHECK(hasStatus(full.report, "drach.order4.trivial", CheckStatus::Pass));
  CHECK(hasStatus(full.report, "drach.order4.extra", CheckStatus::Recorded));
  CHECK(full.order4Extra == extraDimensions(full.order4.basis, trivialDirections(4)));
  CHECK(full.report.find("drach.verdict")->value.rfind("necessary-condition-only", 0) == 0);
  // recorded values for this potential
  CHECK(full.order4Extra == 1);
  CHECK(full.thirdOrder.genuineDimension == 0);
  CHECK(full.report.allPassed());
}

TEST_CASE("ansatz check") {
  const Expression w1 = ALPHA * Expression::x(Rational(-2, 3));
  const Expression w0 = Expression(Rational(-5, 72)) * Expression::hbar(2) * Expression::x(-2);
  const AnsatzResult model = ansatzCheck({w1, w0});
  CHECK_FALSE(model.admissible.basis.empty());
  CHECK(model.solution.genuineDimension == 1);

  const AnsatzResult perturbed = ansatzCheck({ALPHA * Expression::x(Rational(-1, 2)), Expression()});
  CHECK(perturbed.solution.genuineDimension == 0);
  CHECK(perturbed.solution.integrals.empty());

  CHECK_THROWS_AS(ansatzCheck({Expression(), w0}), std::invalid_argument);
  CHECK_THROWS_AS(ansatzCheck({Expression::y(), Expression()}), std::invalid_argument);
}

TEST_CASE("report ordering and serialization") {
  VerificationReport r("demo");
  r.add({"b.check", "second", CheckStatus::Pass, {}, "", 1.5});
  r.add({"a.check", "first", CheckStatus::Fail, {2, 0.5}, "1/3", 2.5});
  r.add({"c.check", "third", CheckStatus::Recorded, {}, "", 0});
  REQUIRE(r.checks().size() == 3);
  CHECK(r.checks()[0].id == "a.check");
  CHECK(r.checks()[2].id == "c.check");
  CHECK(r.failedIds() == std::vector<std::string>{"a.check"});
  const nlohmann::json j = r.toJson();
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["checks"][0]["residual_terms"] == 2);
  CHECK(j["checks"][0]["value"] == "1/3");
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK_FALSE(j.contains("timing"));
  CHECK(r.toJson(true)["timing"]["a.check"]["millis"] == 2.5);
  CHECK(verifyAll().toJson().dump() == verifyAll().toJson().dump());
}
