#ifndef SUPERINT_WEYL_OPERATOR_HPP
#define SUPERINT_WEYL_OPERATOR_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superint/expression.hpp"
#include "superint/parser.hpp"
#include "superint/phase_polynomial.hpp"

namespace superint {

/// Exponent pair (a, b) of d^a/dx^a d^b/dy^b.
struct DerivativeOrder {
  unsigned a = 0;
  unsigned b = 0;
  unsigned total() const { return a + b; }
  friend bool operator==(const DerivativeOrder&, const DerivativeOrder&) = default;
  friend auto operator<=>(const DerivativeOrder&, const DerivativeOrder&) = default;
};

/// Normal-ordered differential operator sum_{a,b} c_ab(x, y) dx^a dy^b, all
/// derivatives to the right. The factors i and hbar of the momenta
/// p_j = -i hbar d_j live inside the coefficients.
class WeylOperator {
 public:
  using Terms = std::map<DerivativeOrder, Expression>;

  WeylOperator() = default;
  /// Multiplication by a function.
  WeylOperator(Expression scalar);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  WeylOperator(T n) : WeylOperator(Expression(n)) {}  // NOLINT

  static WeylOperator term(Expression coefficient, unsigned a, unsigned b);
  static WeylOperator identity() { return WeylOperator(1); }
  static WeylOperator dx() { return term(1, 1, 0); }
  static WeylOperator dy() { return term(1, 0, 1); }
  /// p1 = -i hbar dx.
  static WeylOperator p1();
  /// p2 = -i hbar dy.
  static WeylOperator p2();

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Expression coefficient(unsigned a, unsigned b) const;
  unsigned order() const;
  /// Zeroth-order part when the operator is pure multiplication.
  std::optional<Expression> asScalar() const;

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator-(const WeylOperator& a);
  /// Composition.
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

  template <class F>
  WeylOperator mapCoefficients(F&& f) const {
    WeylOperator r;
    for (const auto& [d, c] : terms_) r.addTerm(d, f(c));
    return r;
  }

  /// Raw normal-ordered text, e.g. "-i*hbar*dx + x".
  std::string str() const;

 private:
  void addTerm(const DerivativeOrder& d, const Expression& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const WeylOperator& op);

/// Normal-ordered product, via d^n o f = sum_k C(n,k) f^(k) d^(n-k).
WeylOperator compose(const WeylOperator& a, const WeylOperator& b);
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);
/// a b + b a (no factor 1/2).
WeylOperator anticommutator(const WeylOperator& a, const WeylOperator& b);

/// p1^k p2^l as a normal-ordered operator.
WeylOperator momentumMonomial(unsigned k, unsigned l);
/// (f p1^k p2^l + p1^k p2^l f) / 2.
WeylOperator symmetrize(const Expression& f, unsigned k, unsigned l);

/// Formal adjoint with respect to the flat measure: (c d^a d^b)^dagger =
/// (-1)^(a+b) d^a d^b o conj(c).
WeylOperator adjoint(const WeylOperator& a);
/// Formal transpose: the adjoint without complex conjugation. On Weyl
/// symbols it is the momentum reflection p -> -p.
WeylOperator transpose(const WeylOperator& a);
WeylOperator selfAdjointPart(const WeylOperator& a);
WeylOperator skewAdjointPart(const WeylOperator& a);

struct ParityComponents {
  WeylOperator even;
  WeylOperator odd;
};
/// Splits by parity of the symmetrized (Weyl) form in the momenta:
/// even = (A + A^T)/2, odd = (A - A^T)/2. For an operator written as
/// sum of (1/2){f, p^k} terms this groups terms by the parity of k.
ParityComponents parityComponents(const WeylOperator& a);

/// Rewrites d_j = (i/hbar) p_j and sets hbar = 0. Throws AlgebraError if a
/// negative power of hbar would survive.
PhasePolynomial classicalLimit(const WeylOperator& a);
/// Classical limit of [A, B]/(i hbar); for well-formed operators this is the
/// Poisson bracket of their classical limits.
PhasePolynomial semiclassicalBracket(const WeylOperator& a, const WeylOperator& b);

/// One term (1/2){coefficient, p1^k p2^l} of a symmetrized expansion.
struct SymmetrizedTerm {
  Expression coefficient;
  unsigned k = 0;
  unsigned l = 0;
};

/// Writes A = sum (1/2){s_kl, p1^k p2^l}, peeling the highest order first.
/// nullopt when some coefficient is not divisible by hbar^(k+l).
std::optional<std::vector<SymmetrizedTerm>> symmetrizedForm(const WeylOperator& a);
/// Momentum notation, e.g. "3*p1^2*p2 + {9/2*alpha*x^(1/3), p1}",
/// where {f, P} = f P + P f. Falls back to the raw form when no symmetrized
/// expansion exists.
std::string symmetrizedString(const WeylOperator& a);

template <>
struct ParseAlgebra<WeylOperator> {
  static WeylOperator fromScalar(Expression e) { return WeylOperator(std::move(e)); }
  static std::optional<Expression> toScalar(const WeylOperator& a) { return a.asScalar(); }
  static WeylOperator multiply(const WeylOperator& a, const WeylOperator& b) { return compose(a, b); }
  static std::optional<WeylOperator> symbol(const std::string& name) {
    if (name == "p1") return WeylOperator::p1();
    if (name == "p2") return WeylOperator::p2();
    if (name == "dx") return WeylOperator::dx();
    if (name == "dy") return WeylOperator::dy();
    return std::nullopt;
  }
};

/// Scalar grammar plus p1, p2 (momentum operators) and dx, dy (raw
/// derivatives). Products compose in the written order.
WeylOperator parseWeylOperator(std::string_view text);

}  // namespace superint

#endif  // SUPERINT_WEYL_OPERATOR_HPP
