#ifndef SUPERINT_TEST_SUPPORT_HPP
#define SUPERINT_TEST_SUPPORT_HPP

#include <complex>
#include <cstdint>
#include <random>

#include "superint/expression.hpp"
#include "superint/phase_polynomial.hpp"
#include "superint/weyl_operator.hpp"

namespace testing {

using namespace superint;

/// Seeded source of small random algebraic objects.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Rational rational() {
    const int num = integer(-9, 9);
    return Rational(num, integer(1, 6));
  }

  Rational exponent(bool fractional) {
    if (!fractional) return Rational(integer(0, 3));
    return Rational(integer(-6, 6), integer(1, 3));
  }

  GaussianRational coefficient(bool complex) {
    return complex ? GaussianRational(rational(), integer(0, 2) == 0 ? rational() : Rational(0))
                   : GaussianRational(rational());
  }

  MonomialKey key(bool fractional, bool params) {
    MonomialKey k;
    k.xExp = exponent(fractional);
    k.yExp = Rational(integer(0, 3));
    if (params) {
      k.alphaPow = static_cast<unsigned>(integer(0, 2));
      k.hbarPow = static_cast<unsigned>(integer(0, 2));
    }
    return k;
  }

  /// Up to maxTerms monomials; x exponents may be negative or fractional, y
  /// exponents are nonnegative integers.
  Expression expression(int maxTerms = 4, bool fractional = true, bool params = true, bool complex = true) {
    Expression e;
    const int n = integer(0, maxTerms);
    for (int i = 0; i < n; ++i) e += Expression::monomial(coefficient(complex), key(fractional, params));
    return e;
  }

  PhasePolynomial phasePolynomial(int maxTerms = 3, unsigned maxDegree = 3) {
    PhasePolynomial p;
    const int n = integer(0, maxTerms);
    for (int i = 0; i < n; ++i)
      p += PhasePolynomial::term(expression(2, true, true, false), static_cast<unsigned>(integer(0, maxDegree)),
                                 static_cast<unsigned>(integer(0, maxDegree)));
    return p;
  }

  WeylOperator weylOperator(int maxTerms = 3, unsigned maxOrder = 2) {
    WeylOperator w;
    const int n = integer(0, maxTerms);
    for (int i = 0; i < n; ++i)
      w += WeylOperator::term(expression(2), static_cast<unsigned>(integer(0, maxOrder)),
                              static_cast<unsigned>(integer(0, maxOrder)));
    return w;
  }

  NumericPoint point() { return {real(0.5, 2.5), real(-1.5, 1.5), real(0.5, 1.5), real(0.3, 1.2)}; }
  PhasePoint phasePoint() { return {real(0.5, 2.5), real(-1.5, 1.5), real(-1.5, 1.5), real(-1.5, 1.5)}; }

 private:
  std::mt19937_64 rng_;
};

/// Action of a normal-ordered operator on a function: sum c d^a_x d^b_y f.
inline Expression applyTo(const WeylOperator& op, const Expression& f) {
  Expression r;
  for (const auto& [d, c] : op.terms()) r += c * diff(f, d.a, d.b);
  return r;
}

/// Independent numeric evaluation: every term summed in complex doubles.
inline std::complex<double> numeric(const Expression& e, const NumericPoint& at) {
  std::complex<double> sum = 0.0;
  for (const auto& [k, c] : e.terms()) {
    const std::complex<double> coeff(c.re.toDouble(), c.im.toDouble());
    sum += coeff * std::pow(at.x, k.xExp.toDouble()) * std::pow(at.y, k.yExp.toDouble()) *
           std::pow(at.alpha, static_cast<int>(k.alphaPow)) * std::pow(at.hbar, static_cast<int>(k.hbarPow));
  }
  return sum;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace testing

#endif  // SUPERINT_TEST_SUPPORT_HPP
