#ifndef SUPERINT_DETERMINING_HPP
#define SUPERINT_DETERMINING_HPP

#include <map>
#include <string>
#include <vector>

#include "superint/expression.hpp"
#include "superint/linalg.hpp"
#include "superint/phase_polynomial.hpp"
#include "superint/weyl_operator.hpp"

namespace superint {

/// Index (j, k, l) of the leading-term constant A_jkl multiplying
/// L3^j p1^k p2^l, L3 = x p2 - y p1.
struct AIndex {
  unsigned j = 0;
  unsigned k = 0;
  unsigned l = 0;
  unsigned order() const { return j + k + l; }
  std::string str() const { return "A" + std::to_string(j) + std::to_string(k) + std::to_string(l); }
  friend bool operator==(const AIndex&, const AIndex&) = default;
  friend auto operator<=>(const AIndex&, const AIndex&) = default;
};

/// Real constants A_jkl, j + k + l = order, of an order-n leading term.
class ACoeffs {
 public:
  explicit ACoeffs(int order);

  /// All (n+1)(n+2)/2 indices of the given order, j descending then k
  /// descending: A300, A210, A201, A120, ...
  static std::vector<AIndex> indices(int order);
  static ACoeffs unit(const AIndex& index);
  static ACoeffs fromVector(int order, const RationalVector& v);

  int order() const { return order_; }
  Rational get(const AIndex& index) const;
  ACoeffs& set(const AIndex& index, Rational value);
  const std::map<AIndex, Rational>& entries() const { return entries_; }
  bool isZero() const { return entries_.empty(); }
  RationalVector toVector() const;

  /// "A021=3, A003=2"; "0" when empty.
  std::string str() const;

  friend bool operator==(const ACoeffs&, const ACoeffs&) = default;

 private:
  int order_;
  std::map<AIndex, Rational> entries_;  // nonzero entries only
};

/// f_1 ... f_{n+1}: the coefficient functions of p1^(n+1-i) p2^(i-1) in the
/// classical leading term, kept symbolic in A (one Expression per A entry).
struct FPolys {
  int order = 0;
  std::vector<std::map<AIndex, Expression>> polys;

  std::vector<Expression> evaluate(const ACoeffs& a) const;
};

/// Leading term sum A_jkl L3^j p1^k p2^l.
PhasePolynomial expandLeadingClassical(const ACoeffs& a);
/// Leading term sum A_jkl (1/2){L3^j, p1^k p2^l}, normal-ordered.
WeylOperator expandLeadingQuantum(const ACoeffs& a);

FPolys buildFPolys(int order);
std::vector<Expression> fPolynomials(const ACoeffs& a);

/// Lower-order data of an integral of order n:
///  order 2: g = {ell}
///  order 3: g = {g1, g2}            ((1/2){g1, p1} + (1/2){g2, p2})
///  order 4: g = {g1, g2, g3}, ell   ((1/2){g1,p1^2} + (1/2){g2,p1 p2} + (1/2){g3,p2^2} + ell)
/// In general g_m multiplies p1^(n-1-m) p2^(m-1) (momentum degree n-2) and
/// ell is the degree n-4 part.
struct IntegralCandidate {
  ACoeffs a;
  std::vector<Expression> g;
  Expression ell;

  static IntegralCandidate order2(ACoeffs a, Expression ell);
  static IntegralCandidate order3(ACoeffs a, Expression g1, Expression g2);
  static IntegralCandidate order4(ACoeffs a, Expression g1, Expression g2, Expression g3, Expression ell);
};

PhasePolynomial classicalHamiltonian(const Expression& potential);
WeylOperator quantumHamiltonian(const Expression& potential);
PhasePolynomial classicalIntegral(const IntegralCandidate& c);
WeylOperator quantumIntegral(const IntegralCandidate& c);

/// Right-hand sides R_k (k = 1..n) of the linear determining equations: the
/// coefficients of p1^(n-k) p2^(k-1) in V_x L_p1 + V_y L_p2.
std::vector<Expression> linearRightHandSides(int order, const Expression& potential, const ACoeffs& a);

/// LHS - RHS of each linear determining equation,
///   d_x g_k + d_y g_{k-1} - R_k,  k = 1..n  (g_0 = g_n = 0).
/// For order 3 these read (g1)_x = 3 f1 V_x + f2 V_y,
/// (g1)_y + (g2)_x = 2(f2 V_x + f3 V_y), (g2)_y = f3 V_x + 3 f4 V_y.
/// Throws std::invalid_argument on an order mismatch.
std::vector<Expression> linearDeterminingResiduals(int order, const Expression& potential,
                                                   const IntegralCandidate& candidate);

/// Cross-derivative compatibility sum_k (-1)^(k-1) d_x^(k-1) d_y^(n-k) R_k,
/// which eliminates every g_m. Linear in A.
Expression compatibilityExpression(int order, const Expression& potential, const ACoeffs& a);
std::map<AIndex, Expression> compatibilityByUnit(int order, const Expression& potential);

/// Components of {H, I} (classical) or [H, I] (quantum) below the linear
/// determining order, i.e. momentum / derivative degree <= n - 3. Zero for a
/// genuine integral; this is the exact stand-in for the nonlinear
/// determining equations.
PhasePolynomial nonlinearResidualClassical(const Expression& potential, const IntegralCandidate& candidate);
WeylOperator nonlinearResidualQuantum(const Expression& potential, const IntegralCandidate& candidate);

struct AdmissibleSpace {
  int order = 0;
  std::vector<ACoeffs> basis;
  Eigen::Index equations = 0;  // rows: (monomial key, real/imag) pairs
  Eigen::Index unknowns = 0;
  Eigen::Index rank = 0;
};

/// Exact null space of the compatibility condition collected over monomial
/// keys (alpha and hbar powers are separate keys; real and imaginary parts
/// split). A necessary condition for an integral with that leading term.
AdmissibleSpace solveAdmissibleA(int order, const Expression& potential);

enum class Flavor { Classical, Quantum };

/// Antiderivative in the monomial ring; throws AlgebraError when a term
/// would integrate to a logarithm.
Expression integrate(const Expression& a, Variable var);

/// Third-order integrals of a fixed potential, solved exactly. For fixed V
/// every determining equation is linear in (A, g1, g2): each admissible A
/// direction gets particular g1, g2 by integrating the linear equations,
/// the homogeneous part c1 p1 + c2 p2 + k L3 is added, and the remaining
/// lower-order components of {H, X} or [H, X] are collected into one exact
/// linear system.
struct ThirdOrderSolution {
  AdmissibleSpace admissible;
  /// Basis of the solution space; entries with a zero leading term are
  /// first-order integrals and are excluded.
  std::vector<IntegralCandidate> integrals;
  /// Rank of the leading terms of all solutions.
  int genuineDimension = 0;
  /// False when some particular solution left the monomial ring (log terms);
  /// the result is then a lower bound.
  bool representable = true;
};

ThirdOrderSolution solveThirdOrderIntegrals(const Expression& potential, Flavor flavor);

/// Leading term of (p1^2 + p2^2)^(n/2) for even n.
ACoeffs hamiltonianPowerLeading(int order);
/// Directions always admissible: the H power for even n, none for odd n.
std::vector<ACoeffs> trivialDirections(int order);

/// Exact membership of v in span(basis).
bool inSpan(const std::vector<ACoeffs>& basis, const ACoeffs& v);
/// dim(span(basis + extra)) - dim(span(extra)): directions beyond the given
/// ones.
int extraDimensions(const std::vector<ACoeffs>& basis, const std::vector<ACoeffs>& extra);

}  // namespace superint

#endif  // SUPERINT_DETERMINING_HPP
