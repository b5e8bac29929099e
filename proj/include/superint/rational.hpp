#ifndef SUPERINT_RATIONAL_HPP
#define SUPERINT_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superint {

/// Arbitrary precision rational number, always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral T, std::integral U>
  Rational(T num, U den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
  }

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  /// Accepts "p", "-p" or "p/q".
  static Rational fromString(std::string_view text) {
    std::string s(text);
    mpq_class v;
    try {
      if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad rational literal '" + s + "'");
    }
    if (v.get_den() == 0) throw std::domain_error("rational with zero denominator");
    return Rational(v);
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool isZero() const { return sgn(value_) == 0; }
  bool isOne() const { return value_ == 1; }
  bool isInteger() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double toDouble() const { return value_.get_d(); }

  /// Integer value; only meaningful when isInteger() and the value fits.
  long toLong() const { return value_.get_num().get_si(); }
  bool fitsLong() const { return isInteger() && value_.get_num().fits_slong_p(); }

  std::string str() const { return value_.get_str(); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const {
    if (isZero()) throw std::domain_error("division by zero rational");
    return Rational(mpq_class(1 / value_));
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.isZero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// Exact complex number a + b i with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GaussianRational(T n) : re(n) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginaryUnit() { return {Rational(0), Rational(1)}; }

  bool isZero() const { return re.isZero() && im.isZero(); }
  bool isReal() const { return im.isZero(); }
  bool isOne() const { return re.isOne() && im.isZero(); }

  GaussianRational conj() const { return {re, -im}; }
  Rational normSquared() const { return re * re + im * im; }

  GaussianRational inverse() const {
    const Rational n = normSquared();
    if (n.isZero()) throw std::domain_error("division by zero gaussian rational");
    return {re / n, -im / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::string str() const;
};

inline std::string GaussianRational::str() const {
  if (im.isZero()) return re.str();
  std::string imag = im.isOne() ? "i" : (im == Rational(-1) ? "-i" : im.str() + "*i");
  if (re.isZero()) return imag;
  if (im.sign() < 0) return "(" + re.str() + " - " + (-im).str() + "*i)";
  return "(" + re.str() + " + " + imag + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

/// Binomial coefficient as a Rational.
inline Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r, mpz_class(1));
}

}  // namespace superint

namespace Eigen {

template <>
struct NumTraits<superint::Rational> : GenericNumTraits<superint::Rational> {
  using Real = superint::Rational;
  using NonInteger = superint::Rational;
  using Literal = superint::Rational;
  using Nested = superint::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SUPERINT_RATIONAL_HPP
