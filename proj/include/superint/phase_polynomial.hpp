#ifndef SUPERINT_PHASE_POLYNOMIAL_HPP
#define SUPERINT_PHASE_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "superint/expression.hpp"
#include "superint/parser.hpp"

namespace superint {

/// Exponent pair (k, l) of the momentum monomial p1^k p2^l.
struct MomentumPower {
  unsigned k = 0;
  unsigned l = 0;
  unsigned degree() const { return k + l; }
  friend bool operator==(const MomentumPower&, const MomentumPower&) = default;
  friend auto operator<=>(const MomentumPower&, const MomentumPower&) = default;
};

/// Classical observable sum_{k,l} c_kl(x, y; alpha, hbar) p1^k p2^l.
class PhasePolynomial {
 public:
  using Terms = std::map<MomentumPower, Expression>;

  PhasePolynomial() = default;
  PhasePolynomial(Expression scalar);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  PhasePolynomial(T n) : PhasePolynomial(Expression(n)) {}  // NOLINT

  static PhasePolynomial term(Expression coefficient, unsigned k, unsigned l);
  static PhasePolynomial p1() { return term(1, 1, 0); }
  static PhasePolynomial p2() { return term(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Expression coefficient(unsigned k, unsigned l) const;
  unsigned degree() const;
  /// Part of homogeneous momentum degree d.
  PhasePolynomial homogeneousPart(unsigned d) const;

  /// Every coefficient is hbar-free with zero imaginary part.
  bool isClassicalReal() const;

  PhasePolynomial& operator+=(const PhasePolynomial& o);
  PhasePolynomial& operator-=(const PhasePolynomial& o);
  friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
  friend PhasePolynomial operator-(PhasePolynomial a, const PhasePolynomial& b) { return a -= b; }
  friend PhasePolynomial operator-(const PhasePolynomial& a);
  friend PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b);
  friend bool operator==(const PhasePolynomial&, const PhasePolynomial&) = default;

  /// Applies f to every coefficient, dropping those that become zero.
  template <class F>
  PhasePolynomial mapCoefficients(F&& f) const {
    PhasePolynomial r;
    for (const auto& [m, c] : terms_) r.addTerm(m, f(c));
    return r;
  }

  std::string str() const;

 private:
  void addTerm(const MomentumPower& m, const Expression& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PhasePolynomial& p);

enum class PhaseVariable { X, Y, P1, P2 };

PhasePolynomial diff(const PhasePolynomial& a, PhaseVariable var);

/// {a, b} = a_x b_p1 - a_p1 b_x + a_y b_p2 - a_p2 b_y, so that {x, p1} = +1.
PhasePolynomial poissonBracket(const PhasePolynomial& a, const PhasePolynomial& b);

PhasePolynomial substituteHbarZero(const PhasePolynomial& a);

struct PhasePoint {
  double x = 0.0;
  double y = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

/// Real part of the numeric value; throws DomainError outside the domain.
double evalAt(const PhasePolynomial& a, const PhasePoint& at, double alpha, double hbar);
std::complex<double> evalAtComplex(const PhasePolynomial& a, const PhasePoint& at, double alpha, double hbar);

struct RationalPhasePoint {
  Rational x;
  Rational y;
  Rational p1;
  Rational p2;
};

/// Exact value at a rational phase point with hbar = 0.
GaussianRational evalExact(const PhasePolynomial& a, const RationalPhasePoint& at, const Rational& alpha);

/// Exact rank of d(fns)/d(x, y, p1, p2) at a rational point. Fractional
/// powers of x must be rational there (choose x a perfect cube for x^(1/3));
/// DomainError otherwise.
int jacobianRank(std::span<const PhasePolynomial> fns, const RationalPhasePoint& at, const Rational& alpha);

template <>
struct ParseAlgebra<PhasePolynomial> {
  static PhasePolynomial fromScalar(Expression e) { return PhasePolynomial(std::move(e)); }
  static std::optional<Expression> toScalar(const PhasePolynomial& p) {
    if (p.isZero()) return Expression();
    if (p.size() == 1 && p.terms().begin()->first == MomentumPower{}) return p.terms().begin()->second;
    return std::nullopt;
  }
  static PhasePolynomial multiply(const PhasePolynomial& a, const PhasePolynomial& b) { return a * b; }
  static std::optional<PhasePolynomial> symbol(const std::string& name) {
    if (name == "p1") return PhasePolynomial::p1();
    if (name == "p2") return PhasePolynomial::p2();
    return std::nullopt;
  }
};

/// Scalar grammar plus the momentum atoms p1, p2.
PhasePolynomial parsePhasePolynomial(std::string_view text);

}  // namespace superint

#endif  // SUPERINT_PHASE_POLYNOMIAL_HPP
