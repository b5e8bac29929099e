#include "superint/expression.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include "superint/errors.hpp"

namespace superint {

Expression::Expression(GaussianRational c) {
  if (!c.isZero()) terms_.emplace(MonomialKey{}, std::move(c));
}

Expression Expression::monomial(GaussianRational c, MonomialKey key) {
  Expression e;
  if (!c.isZero()) e.terms_.emplace(std::move(key), std::move(c));
  return e;
}

Expression Expression::x(Rational exponent) { return monomial(1, MonomialKey{std::move(exponent), 0, 0, 0}); }
Expression Expression::y(Rational exponent) { return monomial(1, MonomialKey{0, std::move(exponent), 0, 0}); }
Expression Expression::alpha(unsigned power) { return monomial(1, MonomialKey{0, 0, power, 0}); }
Expression Expression::hbar(unsigned power) { return monomial(1, MonomialKey{0, 0, 0, power}); }
Expression Expression::i() { return Expression(GaussianRational::imaginaryUnit()); }

bool Expression::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isUnit());
}

std::optional<GaussianRational> Expression::constantValue() const {
  if (terms_.empty()) return GaussianRational{};
  if (!isConstant()) return std::nullopt;
  return terms_.begin()->second;
}

GaussianRational Expression::coefficient(const MonomialKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

bool Expression::isReal() const {
  for (const auto& [k, c] : terms_)
    if (!c.isReal()) return false;
  return true;
}

bool Expression::dependsOnHbar() const {
  for (const auto& [k, c] : terms_)
    if (k.hbarPow > 0) return true;
  return false;
}

bool Expression::dependsOnAlpha() const {
  for (const auto& [k, c] : terms_)
    if (k.alphaPow > 0) return true;
  return false;
}

bool Expression::isPolynomialInXY() const {
  for (const auto& [k, c] : terms_) {
    if (!k.xExp.isInteger() || k.xExp.sign() < 0) return false;
    if (!k.yExp.isInteger() || k.yExp.sign() < 0) return false;
  }
  return true;
}

Expression Expression::conj() const {
  Expression r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
  return r;
}

Expression Expression::realPart() const {
  Expression r;
  for (const auto& [k, c] : terms_)
    if (!c.re.isZero()) r.terms_.emplace(k, GaussianRational(c.re));
  return r;
}

Expression Expression::imagPart() const {
  Expression r;
  for (const auto& [k, c] : terms_)
    if (!c.im.isZero()) r.terms_.emplace(k, GaussianRational(c.im));
  return r;
}

void Expression::addTerm(const MonomialKey& key, const GaussianRational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

Expression& Expression::operator+=(const Expression& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k, c);
  return *this;
}

Expression& Expression::operator-=(const Expression& o) {
  for (const auto& [k, c] : o.terms_) addTerm(k, -c);
  return *this;
}

Expression& Expression::operator*=(const Expression& o) {
  *this = *this * o;
  return *this;
}

Expression& Expression::operator*=(const GaussianRational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Expression operator*(const Expression& a, const Expression& b) {
  Expression r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      MonomialKey k{ka.xExp + kb.xExp, ka.yExp + kb.yExp, ka.alphaPow + kb.alphaPow, ka.hbarPow + kb.hbarPow};
      r.addTerm(k, ca * cb);
    }
  }
  return r;
}

Expression operator-(const Expression& a) {
  Expression r;
  for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
  return r;
}

Expression operator/(const Expression& a, const Expression& b) {
  if (!b.isMonomial()) throw AlgebraError("division by a non-monomial expression '" + b.str() + "'");
  const auto& [kb, cb] = *b.terms_.begin();
  const GaussianRational inv = cb.inverse();
  Expression r;
  for (const auto& [ka, ca] : a.terms_) {
    if (ka.alphaPow < kb.alphaPow || ka.hbarPow < kb.hbarPow)
      throw AlgebraError("division would create a negative power of alpha or hbar");
    MonomialKey k{ka.xExp - kb.xExp, ka.yExp - kb.yExp, ka.alphaPow - kb.alphaPow, ka.hbarPow - kb.hbarPow};
    r.addTerm(k, ca * inv);
  }
  return r;
}

Expression Expression::pow(long n) const {
  if (n < 0) return Expression(1) / pow(-n);
  Expression result(1);
  Expression base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Expression Expression::pow(const Rational& exponent) const {
  if (exponent.fitsLong()) return pow(exponent.toLong());
  if (!isMonomial()) throw AlgebraError("fractional power of a non-monomial expression '" + str() + "'");
  const auto& [k, c] = *terms_.begin();
  if (!c.isOne()) throw AlgebraError("fractional power of a monomial with non-unit coefficient");
  const Rational a = Rational(static_cast<long>(k.alphaPow)) * exponent;
  const Rational h = Rational(static_cast<long>(k.hbarPow)) * exponent;
  if (!a.isInteger() || !h.isInteger() || a.sign() < 0 || h.sign() < 0)
    throw AlgebraError("fractional power produces non-integral alpha or hbar exponent");
  return monomial(1, MonomialKey{k.xExp * exponent, k.yExp * exponent, static_cast<unsigned>(a.toLong()),
                                 static_cast<unsigned>(h.toLong())});
}

namespace {

std::string exponentSuffix(const Rational& e) {
  if (e.isOne()) return "";
  if (e.isInteger() && e.sign() > 0) return "^" + e.str();
  return "^(" + e.str() + ")";
}

std::string factorList(const MonomialKey& k) {
  std::vector<std::string> parts;
  if (k.alphaPow > 0) parts.push_back("alpha" + exponentSuffix(Rational(static_cast<long>(k.alphaPow))));
  if (k.hbarPow > 0) parts.push_back("hbar" + exponentSuffix(Rational(static_cast<long>(k.hbarPow))));
  if (!k.xExp.isZero()) parts.push_back("x" + exponentSuffix(k.xExp));
  if (!k.yExp.isZero()) parts.push_back("y" + exponentSuffix(k.yExp));
  std::string out;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j) out += "*";
    out += parts[j];
  }
  return out;
}

// Splits a coefficient into an overall sign and an unsigned body so that
// "a - b" style output is produced.
std::pair<bool, std::string> coefficientBody(const GaussianRational& c) {
  if (c.im.isZero()) return {c.re.sign() < 0, c.re.abs().str()};
  if (c.re.isZero()) {
    const Rational m = c.im.abs();
    return {c.im.sign() < 0, m.isOne() ? "i" : m.str() + "*i"};
  }
  return {false, c.str()};
}

}  // namespace

std::string Expression::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    auto [negative, body] = coefficientBody(c);
    const std::string factors = factorList(k);
    std::string term;
    if (factors.empty()) {
      term = body;
    } else if (body == "1") {
      term = factors;
    } else {
      term = body + "*" + factors;
    }
    if (first) {
      out += negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Expression& e) { return os << e.str(); }

Expression add(const Expression& a, const Expression& b) { return a + b; }
Expression mul(const Expression& a, const Expression& b) { return a * b; }
Expression neg(const Expression& a) { return -a; }

Expression diff(const Expression& a, Variable var) {
  Expression r;
  for (const auto& [k, c] : a.terms()) {
    const Rational& e = var == Variable::X ? k.xExp : k.yExp;
    if (e.isZero()) continue;
    MonomialKey nk = k;
    (var == Variable::X ? nk.xExp : nk.yExp) -= Rational(1);
    r += Expression::monomial(c * GaussianRational(e), nk);
  }
  return r;
}

Expression diff(const Expression& a, Variable var, unsigned order) {
  Expression r = a;
  for (unsigned j = 0; j < order && !r.isZero(); ++j) r = diff(r, var);
  return r;
}

Expression diff(const Expression& a, unsigned nx, unsigned ny) {
  return diff(diff(a, Variable::X, nx), Variable::Y, ny);
}

Expression substituteHbarZero(const Expression& a) {
  Expression r;
  for (const auto& [k, c] : a.terms())
    if (k.hbarPow == 0) r += Expression::monomial(c, k);
  return r;
}

Expression substituteParameters(const Expression& a, const std::optional<Rational>& alpha,
                                const std::optional<Rational>& hbar) {
  Expression r;
  for (const auto& [k, c] : a.terms()) {
    MonomialKey key = k;
    Rational factor(1);
    if (alpha) {
      factor *= *exactRationalPower(*alpha, Rational(static_cast<long>(key.alphaPow)));
      key.alphaPow = 0;
    }
    if (hbar) {
      factor *= *exactRationalPower(*hbar, Rational(static_cast<long>(key.hbarPow)));
      key.hbarPow = 0;
    }
    r += Expression::monomial(c * GaussianRational(factor), key);
  }
  return r;
}

namespace {

double realPower(double base, const Rational& e, const char* name) {
  if (e.isZero()) return 1.0;
  if (e.isInteger()) {
    if (base == 0.0 && e.sign() < 0) throw DomainError(std::string("negative power of ") + name + " = 0");
    return std::pow(base, static_cast<double>(e.toLong()));
  }
  if (base <= 0.0) throw DomainError(std::string("fractional power of ") + name + " <= 0");
  return std::pow(base, e.toDouble());
}

}  // namespace

std::complex<double> evalNumeric(const Expression& a, const NumericPoint& at) {
  std::complex<double> sum = 0.0;
  for (const auto& [k, c] : a.terms()) {
    double v = realPower(at.x, k.xExp, "x") * realPower(at.y, k.yExp, "y");
    v *= std::pow(at.alpha, static_cast<int>(k.alphaPow)) * std::pow(at.hbar, static_cast<int>(k.hbarPow));
    sum += std::complex<double>(c.re.toDouble(), c.im.toDouble()) * v;
  }
  return sum;
}

std::complex<double> evalNumeric(const Expression& a, double x, double y, double alpha, double hbar) {
  return evalNumeric(a, NumericPoint{x, y, alpha, hbar});
}

namespace {

std::optional<mpz_class> exactRoot(const mpz_class& v, unsigned long q) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), q) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> exactRationalPower(const Rational& base, const Rational& exponent) {
  if (exponent.isZero()) return Rational(1);
  if (base.isZero()) {
    if (exponent.sign() < 0) return std::nullopt;
    return Rational(0);
  }
  if (!exponent.isInteger() && base.sign() < 0) return std::nullopt;
  const mpz_class& q = exponent.denominator();
  const mpz_class p = exponent.numerator();
  if (!q.fits_ulong_p() || !p.fits_slong_p()) return std::nullopt;
  mpz_class num = base.numerator();
  mpz_class den = base.denominator();
  if (q != 1) {
    auto rn = exactRoot(num, q.get_ui());
    auto rd = exactRoot(den, q.get_ui());
    if (!rn || !rd) return std::nullopt;
    num = *rn;
    den = *rd;
  }
  long pe = p.get_si();
  if (pe < 0) {
    std::swap(num, den);
    pe = -pe;
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(pe));
  mpz_pow_ui(d.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(pe));
  return Rational(n, d);
}

GaussianRational evalExact(const Expression& a, const ExactPoint& at) {
  GaussianRational sum;
  for (const auto& [k, c] : a.terms()) {
    auto px = exactRationalPower(at.x, k.xExp);
    auto py = exactRationalPower(at.y, k.yExp);
    if (!px) throw DomainError("x^(" + k.xExp.str() + ") is not rational at x = " + at.x.str());
    if (!py) throw DomainError("y^(" + k.yExp.str() + ") is not rational at y = " + at.y.str());
    auto pa = exactRationalPower(at.alpha, Rational(static_cast<long>(k.alphaPow)));
    auto ph = exactRationalPower(at.hbar, Rational(static_cast<long>(k.hbarPow)));
    sum += c * GaussianRational(*px * *py * *pa * *ph);
  }
  return sum;
}

}  // namespace superint
