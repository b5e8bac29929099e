#ifndef SUPERINT_EXPRESSION_HPP
#define SUPERINT_EXPRESSION_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "superint/rational.hpp"

namespace superint {

enum class Variable { X, Y };

/// Exponent tuple of a monomial x^r y^s alpha^a hbar^h. Ordered
/// lexicographically on (xExp, yExp, alphaPow, hbarPow).
struct MonomialKey {
  Rational xExp;
  Rational yExp;
  unsigned alphaPow = 0;
  unsigned hbarPow = 0;

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend std::strong_ordering operator<=>(const MonomialKey&, const MonomialKey&) = default;

  bool isUnit() const { return xExp.isZero() && yExp.isZero() && alphaPow == 0 && hbarPow == 0; }
};

/// Exact sum of monomials c * x^r * y^s * alpha^a * hbar^h with gaussian
/// rational c. Zero coefficients are never stored, so structural equality is
/// mathematical equality.
class Expression {
 public:
  using Terms = std::map<MonomialKey, GaussianRational>;

  Expression() = default;
  Expression(GaussianRational c);  // NOLINT(google-explicit-constructor)
  Expression(Rational c) : Expression(GaussianRational(std::move(c))) {}  // NOLINT
  template <std::integral T>
  Expression(T n) : Expression(GaussianRational(Rational(n))) {}  // NOLINT

  static Expression monomial(GaussianRational c, MonomialKey key);
  static Expression x(Rational exponent = 1);
  static Expression y(Rational exponent = 1);
  static Expression alpha(unsigned power = 1);
  static Expression hbar(unsigned power = 1);
  static Expression i();

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isMonomial() const { return terms_.size() == 1; }
  /// True for the zero Expression and for a single term with unit key.
  bool isConstant() const;
  /// The gaussian rational value when isConstant(), otherwise nullopt.
  std::optional<GaussianRational> constantValue() const;
  /// Coefficient of the given key (zero when absent).
  GaussianRational coefficient(const MonomialKey& key) const;

  /// Every coefficient has zero imaginary part.
  bool isReal() const;
  bool dependsOnHbar() const;
  bool dependsOnAlpha() const;
  /// True when every x and y exponent is a nonnegative integer.
  bool isPolynomialInXY() const;

  Expression conj() const;
  Expression realPart() const;
  Expression imagPart() const;

  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  Expression& operator*=(const Expression& o);
  Expression& operator*=(const GaussianRational& c);

  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a);
  /// Division by a single-term Expression; throws AlgebraError otherwise.
  friend Expression operator/(const Expression& a, const Expression& b);

  friend bool operator==(const Expression&, const Expression&) = default;

  /// Integer power, repeated multiplication (n >= 0) or inversion of a
  /// monomial (n < 0).
  Expression pow(long n) const;
  /// Rational power; defined for monomials whose coefficient is 1 and whose
  /// alpha/hbar powers stay integral.
  Expression pow(const Rational& exponent) const;

  /// Canonical text: terms in MonomialKey order, exact rationals as p/q.
  std::string str() const;

 private:
  void addTerm(const MonomialKey& key, const GaussianRational& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Expression& e);

Expression add(const Expression& a, const Expression& b);
Expression mul(const Expression& a, const Expression& b);
Expression neg(const Expression& a);

/// Term-by-term power rule.
Expression diff(const Expression& a, Variable var);
Expression diff(const Expression& a, Variable var, unsigned order);
/// Mixed partial derivative d^nx/dx^nx d^ny/dy^ny.
Expression diff(const Expression& a, unsigned nx, unsigned ny);

/// Drops every term carrying a positive power of hbar.
Expression substituteHbarZero(const Expression& a);
/// Replaces alpha and/or hbar by exact values (0^0 = 1).
Expression substituteParameters(const Expression& a, const std::optional<Rational>& alpha,
                                const std::optional<Rational>& hbar);

struct NumericPoint {
  double x = 0.0;
  double y = 0.0;
  double alpha = 0.0;
  double hbar = 0.0;
};

/// Floating evaluation. Fractional x (or y) exponents require a positive base;
/// negative exponents require a nonzero base. Throws DomainError otherwise.
std::complex<double> evalNumeric(const Expression& a, const NumericPoint& at);
std::complex<double> evalNumeric(const Expression& a, double x, double y, double alpha, double hbar);

struct ExactPoint {
  Rational x;
  Rational y;
  Rational alpha;
  Rational hbar;
};

/// Exact evaluation at a rational point. Throws DomainError when a
/// fractional power of a coordinate is irrational (e.g. x^(1/3) at x = 2) or
/// otherwise undefined.
GaussianRational evalExact(const Expression& a, const ExactPoint& at);

/// Exact r-th power of a rational base; nullopt when the result is irrational.
std::optional<Rational> exactRationalPower(const Rational& base, const Rational& exponent);

}  // namespace superint

#endif  // SUPERINT_EXPRESSION_HPP
