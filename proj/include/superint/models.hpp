#ifndef SUPERINT_MODELS_HPP
#define SUPERINT_MODELS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superint/determining.hpp"
#include "superint/report.hpp"

namespace superint {

using Observable = std::variant<PhasePolynomial, WeylOperator>;

struct NamedObservable {
  std::string name;
  Observable value;
};

/// A Hamiltonian system with its integrals; integrals[0] is H.
struct SystemSpec {
  std::string name;
  Flavor flavor = Flavor::Classical;
  Expression potential;
  std::vector<NamedObservable> integrals;
  /// When set, the bracket of the two integrals after H must equal plus or
  /// minus this value.
  std::optional<Expression> bracketMagnitude;

  const Observable& get(const std::string& name) const;
};

/// Switches for the hbar^2 corrections of the quantum system.
struct ModelVariant {
  bool potentialCorrection = true;
  bool xCorrection = true;
};

Expression modelPotential(Flavor flavor, bool withCorrection = true);
IntegralCandidate modelX(Flavor flavor, bool withCorrection = true);
IntegralCandidate modelY(Flavor flavor);
/// H, X, Y; alpha stays symbolic.
SystemSpec modelSystem(Flavor flavor, ModelVariant variant = {});

/// Member-by-member classical limit of a quantum system.
SystemSpec classicalLimit(const SystemSpec& quantum);

/// Commutation with H, the bracket of the remaining integrals, hermiticity or
/// reality, parity, Jacobian rank at x in {1, 8, 27}, y = 0, p = (0, 1),
/// alpha = 1, and the order-2 admissible space. Check ids are prefixed with
/// the system name.
VerificationReport verifyTheorem(const SystemSpec& spec);

/// classicalLimit of every quantum member equals the classical member.
VerificationReport verifyClassicalLimit(const SystemSpec& quantum, const SystemSpec& classical);

/// Both model systems plus the classical limit suite.
VerificationReport verifyAll();

struct DrachParams {
  Rational a;
  Rational b;
  Rational c;

  /// x^(-2/3) (a + b y + c (4x^2 + 3y^2))
  Expression potential() const;
};

struct DrachResult {
  VerificationReport report;
  AdmissibleSpace order3;
  AdmissibleSpace order4;
  ThirdOrderSolution thirdOrder;
  /// Order-4 directions beyond H^2.
  int order4Extra = 0;
};

/// Order-3 and order-4 admissible spaces plus the exact third-order solve.
/// Every verdict is a necessary condition only.
DrachResult drachSuite(const DrachParams& params);

/// V = w1(x) y + w0(x).
struct AnsatzPotential {
  Expression w1;
  Expression w0;

  /// Throws std::invalid_argument when w1 = 0 or either part depends on y.
  Expression potential() const;
};

struct AnsatzResult {
  VerificationReport report;
  AdmissibleSpace admissible;
  ThirdOrderSolution solution;
};

/// The flavor is quantum when the potential involves hbar.
AnsatzResult ansatzCheck(const AnsatzPotential& p);

}  // namespace superint

#endif  // SUPERINT_MODELS_HPP
