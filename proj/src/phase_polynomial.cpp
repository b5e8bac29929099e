#include "superint/phase_polynomial.hpp"

#include <ostream>

#include "format_detail.hpp"
#include "superint/errors.hpp"
#include "superint/linalg.hpp"

namespace superint {

PhasePolynomial::PhasePolynomial(Expression scalar) { addTerm(MomentumPower{}, scalar); }

PhasePolynomial PhasePolynomial::term(Expression coefficient, unsigned k, unsigned l) {
  PhasePolynomial p;
  p.addTerm(MomentumPower{k, l}, coefficient);
  return p;
}

Expression PhasePolynomial::coefficient(unsigned k, unsigned l) const {
  auto it = terms_.find(MomentumPower{k, l});
  return it == terms_.end() ? Expression() : it->second;
}

unsigned PhasePolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

PhasePolynomial PhasePolynomial::homogeneousPart(unsigned d) const {
  PhasePolynomial r;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

bool PhasePolynomial::isClassicalReal() const {
  for (const auto& [m, c] : terms_)
    if (c.dependsOnHbar() || !c.isReal()) return false;
  return true;
}

void PhasePolynomial::addTerm(const MomentumPower& m, const Expression& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

PhasePolynomial operator-(const PhasePolynomial& a) {
  PhasePolynomial r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b) {
  PhasePolynomial r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.addTerm(MomentumPower{ma.k + mb.k, ma.l + mb.l}, ca * cb);
  return r;
}

std::string PhasePolynomial::str() const {
  std::vector<std::pair<Expression, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    parts.emplace_back(it->second, detail::powerFactors("p1", it->first.k, "p2", it->first.l));
  return detail::joinSummands(parts);
}

std::ostream& operator<<(std::ostream& os, const PhasePolynomial& p) { return os << p.str(); }

PhasePolynomial diff(const PhasePolynomial& a, PhaseVariable var) {
  PhasePolynomial r;
  for (const auto& [m, c] : a.terms()) {
    switch (var) {
      case PhaseVariable::X:
        r += PhasePolynomial::term(diff(c, Variable::X), m.k, m.l);
        break;
      case PhaseVariable::Y:
        r += PhasePolynomial::term(diff(c, Variable::Y), m.k, m.l);
        break;
      case PhaseVariable::P1:
        if (m.k > 0) r += PhasePolynomial::term(c * Expression(static_cast<long>(m.k)), m.k - 1, m.l);
        break;
      case PhaseVariable::P2:
        if (m.l > 0) r += PhasePolynomial::term(c * Expression(static_cast<long>(m.l)), m.k, m.l - 1);
        break;
    }
  }
  return r;
}

PhasePolynomial poissonBracket(const PhasePolynomial& a, const PhasePolynomial& b) {
  using V = PhaseVariable;
  return diff(a, V::X) * diff(b, V::P1) - diff(a, V::P1) * diff(b, V::X) + diff(a, V::Y) * diff(b, V::P2) -
         diff(a, V::P2) * diff(b, V::Y);
}

PhasePolynomial substituteHbarZero(const PhasePolynomial& a) {
  return a.mapCoefficients([](const Expression& c) { return substituteHbarZero(c); });
}

std::complex<double> evalAtComplex(const PhasePolynomial& a, const PhasePoint& at, double alpha, double hbar) {
  std::complex<double> sum = 0.0;
  const NumericPoint q{at.x, at.y, alpha, hbar};
  for (const auto& [m, c] : a.terms())
    sum += evalNumeric(c, q) * std::pow(at.p1, static_cast<int>(m.k)) * std::pow(at.p2, static_cast<int>(m.l));
  return sum;
}

double evalAt(const PhasePolynomial& a, const PhasePoint& at, double alpha, double hbar) {
  return evalAtComplex(a, at, alpha, hbar).real();
}

GaussianRational evalExact(const PhasePolynomial& a, const RationalPhasePoint& at, const Rational& alpha) {
  GaussianRational sum;
  const ExactPoint q{at.x, at.y, alpha, Rational(0)};
  for (const auto& [m, c] : a.terms()) {
    const Rational mono = *exactRationalPower(at.p1, Rational(static_cast<long>(m.k))) *
                          *exactRationalPower(at.p2, Rational(static_cast<long>(m.l)));
    sum += evalExact(c, q) * GaussianRational(mono);
  }
  return sum;
}

int jacobianRank(std::span<const PhasePolynomial> fns, const RationalPhasePoint& at, const Rational& alpha) {
  using V = PhaseVariable;
  constexpr V vars[] = {V::X, V::Y, V::P1, V::P2};
  RationalMatrix jac(static_cast<Eigen::Index>(fns.size()), 4);
  for (std::size_t r = 0; r < fns.size(); ++r) {
    for (int c = 0; c < 4; ++c) {
      const GaussianRational v = evalExact(diff(fns[r], vars[c]), at, alpha);
      if (!v.isReal()) throw DomainError("complex Jacobian entry; rank is defined for real observables");
      jac(static_cast<Eigen::Index>(r), c) = v.re;
    }
  }
  return static_cast<int>(exactRank(jac));
}

PhasePolynomial parsePhasePolynomial(std::string_view text) {
  return evaluateSyntax<PhasePolynomial>(parseSyntax(text));
}

}  // namespace superint
