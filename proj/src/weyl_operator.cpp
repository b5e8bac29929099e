#include "superint/weyl_operator.hpp"

#include <ostream>

#include "format_detail.hpp"
#include "superint/errors.hpp"

namespace superint {

namespace {

GaussianRational powerOfI(unsigned n) {
  switch (n % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// (-i hbar)^n
Expression momentumFactor(unsigned n) {
  Expression f(powerOfI(3 * n));
  return f * Expression::hbar(n);
}

}  // namespace

WeylOperator::WeylOperator(Expression scalar) { addTerm(DerivativeOrder{}, scalar); }

WeylOperator WeylOperator::term(Expression coefficient, unsigned a, unsigned b) {
  WeylOperator op;
  op.addTerm(DerivativeOrder{a, b}, coefficient);
  return op;
}

WeylOperator WeylOperator::p1() { return term(momentumFactor(1), 1, 0); }
WeylOperator WeylOperator::p2() { return term(momentumFactor(1), 0, 1); }

Expression WeylOperator::coefficient(unsigned a, unsigned b) const {
  auto it = terms_.find(DerivativeOrder{a, b});
  return it == terms_.end() ? Expression() : it->second;
}

unsigned WeylOperator::order() const {
  unsigned n = 0;
  for (const auto& [d, c] : terms_) n = std::max(n, d.total());
  return n;
}

std::optional<Expression> WeylOperator::asScalar() const {
  if (terms_.empty()) return Expression();
  if (terms_.size() == 1 && terms_.begin()->first == DerivativeOrder{}) return terms_.begin()->second;
  return std::nullopt;
}

void WeylOperator::addTerm(const DerivativeOrder& d, const Expression& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  for (const auto& [d, c] : o.terms_) addTerm(d, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  for (const auto& [d, c] : o.terms_) addTerm(d, -c);
  return *this;
}

WeylOperator operator-(const WeylOperator& a) {
  WeylOperator r;
  for (const auto& [d, c] : a.terms_) r.terms_.emplace(d, -c);
  return r;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator r;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      // dx^a dy^b o cb = sum_{i,j} C(a,i) C(b,j) (dx^i dy^j cb) dx^(a-i) dy^(b-j)
      for (unsigned i = 0; i <= da.a; ++i) {
        const Expression cbx = diff(cb, Variable::X, i);
        if (cbx.isZero()) break;
        for (unsigned j = 0; j <= da.b; ++j) {
          const Expression cbxy = diff(cbx, Variable::Y, j);
          if (cbxy.isZero()) break;
          Expression c = ca * cbxy;
          c *= GaussianRational(binomial(da.a, i) * binomial(da.b, j));
          r.addTerm(DerivativeOrder{da.a - i + db.a, da.b - j + db.b}, c);
        }
      }
    }
  }
  return r;
}

std::string WeylOperator::str() const {
  std::vector<std::pair<Expression, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    parts.emplace_back(it->second, detail::powerFactors("dx", it->first.a, "dy", it->first.b));
  return detail::joinSummands(parts);
}

std::ostream& operator<<(std::ostream& os, const WeylOperator& op) { return os << op.str(); }

WeylOperator compose(const WeylOperator& a, const WeylOperator& b) { return a * b; }

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return a * b - b * a; }

WeylOperator anticommutator(const WeylOperator& a, const WeylOperator& b) { return a * b + b * a; }

WeylOperator momentumMonomial(unsigned k, unsigned l) { return WeylOperator::term(momentumFactor(k + l), k, l); }

WeylOperator symmetrize(const Expression& f, unsigned k, unsigned l) {
  const WeylOperator mult(f);
  const WeylOperator mom = momentumMonomial(k, l);
  WeylOperator s = mult * mom + mom * mult;
  return s.mapCoefficients([](const Expression& c) { return c * Expression(Rational(1, 2)); });
}

namespace {

WeylOperator reflect(const WeylOperator& a, bool conjugate) {
  WeylOperator r;
  for (const auto& [d, c] : a.terms()) {
    Expression coeff = conjugate ? c.conj() : c;
    if (d.total() % 2 == 1) coeff = -coeff;
    r += WeylOperator::term(1, d.a, d.b) * WeylOperator(coeff);
  }
  return r;
}

WeylOperator halve(const WeylOperator& a) {
  return a.mapCoefficients([](const Expression& c) { return c * Expression(Rational(1, 2)); });
}

}  // namespace

WeylOperator adjoint(const WeylOperator& a) { return reflect(a, true); }
WeylOperator transpose(const WeylOperator& a) { return reflect(a, false); }
WeylOperator selfAdjointPart(const WeylOperator& a) { return halve(a + adjoint(a)); }
WeylOperator skewAdjointPart(const WeylOperator& a) { return halve(a - adjoint(a)); }

ParityComponents parityComponents(const WeylOperator& a) {
  const WeylOperator t = transpose(a);
  return {halve(a + t), halve(a - t)};
}

namespace {

// Each term c dx^a dy^b becomes prefactor * c * (i/hbar)^(a+b) / hbar^extra
// p1^a p2^b; only hbar-free remainders are kept.
PhasePolynomial toClassical(const WeylOperator& a, unsigned extraHbar, const GaussianRational& prefactor) {
  PhasePolynomial r;
  for (const auto& [d, c] : a.terms()) {
    const unsigned shift = d.total() + extraHbar;
    const GaussianRational phase = prefactor * powerOfI(d.total());
    Expression kept;
    for (const auto& [key, coeff] : c.terms()) {
      if (key.hbarPow < shift)
        throw AlgebraError("negative power of hbar in classical limit of term at derivative order (" +
                           std::to_string(d.a) + "," + std::to_string(d.b) + ")");
      if (key.hbarPow == shift) {
        MonomialKey k = key;
        k.hbarPow = 0;
        kept += Expression::monomial(coeff * phase, k);
      }
    }
    r += PhasePolynomial::term(kept, d.a, d.b);
  }
  return r;
}

}  // namespace

PhasePolynomial classicalLimit(const WeylOperator& a) { return toClassical(a, 0, GaussianRational(1)); }

PhasePolynomial semiclassicalBracket(const WeylOperator& a, const WeylOperator& b) {
  // 1/i = -i
  return toClassical(commutator(a, b), 1, GaussianRational(0, -1));
}

std::optional<std::vector<SymmetrizedTerm>> symmetrizedForm(const WeylOperator& a) {
  std::vector<SymmetrizedTerm> out;
  WeylOperator rest = a;
  while (!rest.isZero()) {
    const unsigned n = rest.order();
    const Expression divisor = momentumFactor(n);
    std::vector<SymmetrizedTerm> level;
    for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it) {
      if (it->first.total() != n) continue;
      for (const auto& [key, coeff] : it->second.terms())
        if (key.hbarPow < n) return std::nullopt;
      level.push_back({it->second / divisor, it->first.a, it->first.b});
    }
    for (const auto& t : level) {
      rest -= symmetrize(t.coefficient, t.k, t.l);
      out.push_back(t);
    }
  }
  return out;
}

std::string symmetrizedString(const WeylOperator& a) {
  auto form = symmetrizedForm(a);
  if (!form) return a.str();
  std::vector<std::pair<Expression, std::string>> parts;
  std::string out;
  // Constant coefficients print as c*P; the rest as {c/2, P}.
  auto flush = [&]() {
    if (parts.empty()) return;
    const std::string chunk = detail::joinSummands(parts);
    if (out.empty()) {
      out = chunk;
    } else if (chunk.front() == '-') {
      out += " - " + chunk.substr(1);
    } else {
      out += " + " + chunk;
    }
    parts.clear();
  };
  for (const auto& t : *form) {
    const std::string mom = detail::powerFactors("p1", t.k, "p2", t.l);
    if (mom.empty() || t.coefficient.isConstant()) {
      parts.emplace_back(t.coefficient, mom);
    } else {
      flush();
      const Expression half = t.coefficient * Expression(Rational(1, 2));
      const std::string chunk = "{" + half.str() + ", " + mom + "}";
      out += out.empty() ? chunk : " + " + chunk;
    }
  }
  flush();
  return out.empty() ? "0" : out;
}

WeylOperator parseWeylOperator(std::string_view text) { return evaluateSyntax<WeylOperator>(parseSyntax(text)); }

}  // namespace superint
