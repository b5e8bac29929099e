#include "superint/determining.hpp"

#include "superint/errors.hpp"

#include <optional>
#include <set>
#include <stdexcept>

namespace superint {

namespace {

void checkOrder(int order) {
  if (order < 1 || order > 8) throw std::invalid_argument("unsupported integral order " + std::to_string(order));
}

PhasePolynomial angularMomentum() {
  return PhasePolynomial::term(Expression::x(), 0, 1) - PhasePolynomial::term(Expression::y(), 1, 0);
}

PhasePolynomial phasePower(const PhasePolynomial& p, unsigned n) {
  PhasePolynomial r(1);
  for (unsigned j = 0; j < n; ++j) r = r * p;
  return r;
}

WeylOperator operatorPower(const WeylOperator& p, unsigned n) {
  WeylOperator r = WeylOperator::identity();
  for (unsigned j = 0; j < n; ++j) r = r * p;
  return r;
}

}  // namespace

ACoeffs::ACoeffs(int order) : order_(order) { checkOrder(order); }

std::vector<AIndex> ACoeffs::indices(int order) {
  checkOrder(order);
  std::vector<AIndex> out;
  const auto n = static_cast<unsigned>(order);
  for (unsigned j = n + 1; j-- > 0;)
    for (unsigned k = n - j + 1; k-- > 0;) out.push_back(AIndex{j, k, n - j - k});
  return out;
}

ACoeffs ACoeffs::unit(const AIndex& index) {
  ACoeffs a(static_cast<int>(index.order()));
  a.set(index, 1);
  return a;
}

ACoeffs ACoeffs::fromVector(int order, const RationalVector& v) {
  ACoeffs a(order);
  const auto idx = indices(order);
  if (static_cast<std::size_t>(v.size()) != idx.size()) throw std::invalid_argument("A vector length mismatch");
  for (std::size_t r = 0; r < idx.size(); ++r) a.set(idx[r], v(static_cast<Eigen::Index>(r)));
  return a;
}

Rational ACoeffs::get(const AIndex& index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Rational(0) : it->second;
}

ACoeffs& ACoeffs::set(const AIndex& index, Rational value) {
  if (static_cast<int>(index.order()) != order_)
    throw std::invalid_argument("index " + index.str() + " does not match order " + std::to_string(order_));
  if (value.isZero()) {
    entries_.erase(index);
  } else {
    entries_[index] = std::move(value);
  }
  return *this;
}

RationalVector ACoeffs::toVector() const {
  const auto idx = indices(order_);
  RationalVector v(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) v(static_cast<Eigen::Index>(r)) = get(idx[r]);
  return v;
}

std::string ACoeffs::str() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& idx : indices(order_)) {
    auto it = entries_.find(idx);
    if (it == entries_.end()) continue;
    if (!out.empty()) out += ", ";
    out += idx.str() + "=" + it->second.str();
  }
  return out;
}

std::vector<Expression> FPolys::evaluate(const ACoeffs& a) const {
  std::vector<Expression> out;
  for (const auto& poly : polys) {
    Expression f;
    for (const auto& [idx, e] : poly) {
      const Rational v = a.get(idx);
      if (!v.isZero()) f += e * Expression(v);
    }
    out.push_back(std::move(f));
  }
  return out;
}

PhasePolynomial expandLeadingClassical(const ACoeffs& a) {
  const PhasePolynomial l3 = angularMomentum();
  PhasePolynomial out;
  for (const auto& [idx, v] : a.entries())
    out += phasePower(l3, idx.j) * PhasePolynomial::term(Expression(v), idx.k, idx.l);
  return out;
}

WeylOperator expandLeadingQuantum(const ACoeffs& a) {
  const WeylOperator l3 = WeylOperator(Expression::x()) * WeylOperator::p2() -
                          WeylOperator(Expression::y()) * WeylOperator::p1();
  WeylOperator out;
  for (const auto& [idx, v] : a.entries()) {
    const WeylOperator lj = operatorPower(l3, idx.j);
    const WeylOperator pm = momentumMonomial(idx.k, idx.l);
    const WeylOperator sym = anticommutator(lj, pm);
    out += sym.mapCoefficients([&v](const Expression& c) { return c * Expression(v * Rational(1, 2)); });
  }
  return out;
}

FPolys buildFPolys(int order) {
  FPolys f;
  f.order = order;
  const auto n = static_cast<unsigned>(order);
  f.polys.resize(n + 1);
  for (const auto& idx : ACoeffs::indices(order)) {
    const PhasePolynomial lead = expandLeadingClassical(ACoeffs::unit(idx));
    for (unsigned i = 1; i <= n + 1; ++i) {
      Expression c = lead.coefficient(n + 1 - i, i - 1);
      if (!c.isZero()) f.polys[i - 1].emplace(idx, std::move(c));
    }
  }
  return f;
}

std::vector<Expression> fPolynomials(const ACoeffs& a) {
  std::vector<Expression> out;
  const auto n = static_cast<unsigned>(a.order());
  const PhasePolynomial lead = expandLeadingClassical(a);
  for (unsigned i = 1; i <= n + 1; ++i) out.push_back(lead.coefficient(n + 1 - i, i - 1));
  return out;
}

IntegralCandidate IntegralCandidate::order2(ACoeffs a, Expression ell) {
  if (a.order() != 2) throw std::invalid_argument("order-2 candidate needs order-2 coefficients");
  return {std::move(a), {std::move(ell)}, Expression()};
}

IntegralCandidate IntegralCandidate::order3(ACoeffs a, Expression g1, Expression g2) {
  if (a.order() != 3) throw std::invalid_argument("order-3 candidate needs order-3 coefficients");
  return {std::move(a), {std::move(g1), std::move(g2)}, Expression()};
}

IntegralCandidate IntegralCandidate::order4(ACoeffs a, Expression g1, Expression g2, Expression g3,
                                            Expression ell) {
  if (a.order() != 4) throw std::invalid_argument("order-4 candidate needs order-4 coefficients");
  return {std::move(a), {std::move(g1), std::move(g2), std::move(g3)}, std::move(ell)};
}

PhasePolynomial classicalHamiltonian(const Expression& potential) {
  return PhasePolynomial::term(Rational(1, 2), 2, 0) + PhasePolynomial::term(Rational(1, 2), 0, 2) +
         PhasePolynomial(potential);
}

WeylOperator quantumHamiltonian(const Expression& potential) {
  const Expression half(Rational(1, 2));
  return (momentumMonomial(2, 0) + momentumMonomial(0, 2)).mapCoefficients([&](const Expression& c) {
    return c * half;
  }) + WeylOperator(potential);
}

PhasePolynomial classicalIntegral(const IntegralCandidate& c) {
  const auto n = static_cast<unsigned>(c.a.order());
  PhasePolynomial out = expandLeadingClassical(c.a);
  for (unsigned m = 1; m <= c.g.size(); ++m) out += PhasePolynomial::term(c.g[m - 1], n - 1 - m, m - 1);
  out += PhasePolynomial(c.ell);
  return out;
}

WeylOperator quantumIntegral(const IntegralCandidate& c) {
  const auto n = static_cast<unsigned>(c.a.order());
  WeylOperator out = expandLeadingQuantum(c.a);
  for (unsigned m = 1; m <= c.g.size(); ++m) out += symmetrize(c.g[m - 1], n - 1 - m, m - 1);
  out += WeylOperator(c.ell);
  return out;
}

std::vector<Expression> linearRightHandSides(int order, const Expression& potential, const ACoeffs& a) {
  if (a.order() != order) throw std::invalid_argument("order mismatch in determining equations");
  const auto n = static_cast<unsigned>(order);
  const PhasePolynomial lead = expandLeadingClassical(a);
  const PhasePolynomial rhs = PhasePolynomial(diff(potential, Variable::X)) * diff(lead, PhaseVariable::P1) +
                              PhasePolynomial(diff(potential, Variable::Y)) * diff(lead, PhaseVariable::P2);
  std::vector<Expression> out;
  for (unsigned k = 1; k <= n; ++k) out.push_back(rhs.coefficient(n - k, k - 1));
  return out;
}

std::vector<Expression> linearDeterminingResiduals(int order, const Expression& potential,
                                                   const IntegralCandidate& candidate) {
  if (candidate.a.order() != order || candidate.g.size() != static_cast<std::size_t>(order - 1))
    throw std::invalid_argument("candidate does not match order " + std::to_string(order));
  const auto n = static_cast<unsigned>(order);
  const auto rhs = linearRightHandSides(order, potential, candidate.a);
  std::vector<Expression> out;
  for (unsigned k = 1; k <= n; ++k) {
    Expression lhs;
    if (k <= n - 1) lhs += diff(candidate.g[k - 1], Variable::X);
    if (k >= 2) lhs += diff(candidate.g[k - 2], Variable::Y);
    out.push_back(lhs - rhs[k - 1]);
  }
  return out;
}

Expression compatibilityExpression(int order, const Expression& potential, const ACoeffs& a) {
  const auto n = static_cast<unsigned>(order);
  const auto rhs = linearRightHandSides(order, potential, a);
  Expression out;
  for (unsigned k = 1; k <= n; ++k) {
    const Expression term = diff(rhs[k - 1], k - 1, n - k);
    if (k % 2 == 1) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

std::map<AIndex, Expression> compatibilityByUnit(int order, const Expression& potential) {
  std::map<AIndex, Expression> out;
  for (const auto& idx : ACoeffs::indices(order))
    out.emplace(idx, compatibilityExpression(order, potential, ACoeffs::unit(idx)));
  return out;
}

PhasePolynomial nonlinearResidualClassical(const Expression& potential, const IntegralCandidate& candidate) {
  const int n = candidate.a.order();
  const PhasePolynomial bracket = poissonBracket(classicalHamiltonian(potential), classicalIntegral(candidate));
  PhasePolynomial out;
  for (const auto& [m, c] : bracket.terms())
    if (static_cast<int>(m.degree()) <= n - 3) out += PhasePolynomial::term(c, m.k, m.l);
  return out;
}

WeylOperator nonlinearResidualQuantum(const Expression& potential, const IntegralCandidate& candidate) {
  const int n = candidate.a.order();
  const WeylOperator comm = commutator(quantumHamiltonian(potential), quantumIntegral(candidate));
  WeylOperator out;
  for (const auto& [d, c] : comm.terms())
    if (static_cast<int>(d.total()) <= n - 3) out += WeylOperator::term(c, d.a, d.b);
  return out;
}

AdmissibleSpace solveAdmissibleA(int order, const Expression& potential) {
  const auto idx = ACoeffs::indices(order);
  const auto byUnit = compatibilityByUnit(order, potential);

  std::set<MonomialKey> keys;
  for (const auto& [i, e] : byUnit)
    for (const auto& [k, c] : e.terms()) keys.insert(k);

  // Row 2r: real part of key r, row 2r+1: imaginary part.
  std::vector<MonomialKey> keyList(keys.begin(), keys.end());
  RationalMatrix m = RationalMatrix::Constant(static_cast<Eigen::Index>(2 * keyList.size()),
                                              static_cast<Eigen::Index>(idx.size()), Rational(0));
  for (std::size_t col = 0; col < idx.size(); ++col) {
    const Expression& e = byUnit.at(idx[col]);
    for (std::size_t r = 0; r < keyList.size(); ++r) {
      const GaussianRational c = e.coefficient(keyList[r]);
      m(static_cast<Eigen::Index>(2 * r), static_cast<Eigen::Index>(col)) = c.re;
      m(static_cast<Eigen::Index>(2 * r + 1), static_cast<Eigen::Index>(col)) = c.im;
    }
  }

  AdmissibleSpace out;
  out.order = order;
  out.equations = m.rows();
  out.unknowns = m.cols();
  const RationalMatrix ns = nullSpace(m);
  out.rank = out.unknowns - ns.cols();
  for (Eigen::Index c = 0; c < ns.cols(); ++c) out.basis.push_back(ACoeffs::fromVector(order, ns.col(c)));
  return out;
}

ACoeffs hamiltonianPowerLeading(int order) {
  if (order % 2 != 0) throw std::invalid_argument("Hamiltonian powers have even order");
  const PhasePolynomial kinetic = PhasePolynomial::term(1, 2, 0) + PhasePolynomial::term(1, 0, 2);
  const PhasePolynomial power = phasePower(kinetic, static_cast<unsigned>(order / 2));
  ACoeffs a(order);
  for (const auto& [m, c] : power.terms()) a.set(AIndex{0, m.k, m.l}, c.constantValue()->re);
  return a;
}

std::vector<ACoeffs> trivialDirections(int order) {
  if (order % 2 != 0) return {};
  return {hamiltonianPowerLeading(order)};
}

namespace {

Eigen::Index spanRank(const std::vector<ACoeffs>& vs, int order) {
  if (vs.empty()) return 0;
  RationalMatrix m(static_cast<Eigen::Index>(vs.size()),
                   static_cast<Eigen::Index>(ACoeffs::indices(order).size()));
  for (std::size_t r = 0; r < vs.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = vs[r].toVector().transpose();
  return exactRank(m);
}

}  // namespace

bool inSpan(const std::vector<ACoeffs>& basis, const ACoeffs& v) {
  if (v.isZero()) return true;
  std::vector<ACoeffs> all = basis;
  all.push_back(v);
  return spanRank(all, v.order()) == spanRank(basis, v.order());
}

int extraDimensions(const std::vector<ACoeffs>& basis, const std::vector<ACoeffs>& extra) {
  if (basis.empty()) return 0;
  const int order = basis.front().order();
  std::vector<ACoeffs> all = basis;
  all.insert(all.end(), extra.begin(), extra.end());
  return static_cast<int>(spanRank(all, order) - spanRank(extra, order));
}

}  // namespace superint

namespace superint {

Expression integrate(const Expression& a, Variable var) {
  Expression out;
  for (const auto& [k, c] : a.terms()) {
    MonomialKey nk = k;
    Rational& e = var == Variable::X ? nk.xExp : nk.yExp;
    e += Rational(1);
    if (e.isZero()) throw AlgebraError("antiderivative of a reciprocal power is logarithmic");
    out += Expression::monomial(c / GaussianRational(e), nk);
  }
  return out;
}

namespace {

// Splits S(x, y) = a(y) + b(x); the constant goes to b. nullopt when a
// mixed term is present.
std::optional<std::pair<Expression, Expression>> separate(const Expression& s) {
  Expression ay, bx;
  for (const auto& [k, c] : s.terms()) {
    const Expression t = Expression::monomial(c, k);
    if (!k.xExp.isZero() && !k.yExp.isZero()) return std::nullopt;
    if (k.xExp.isZero() && !k.yExp.isZero()) {
      ay += t;
    } else {
      bx += t;
    }
  }
  return std::make_pair(ay, bx);
}

// g1, g2 with (g1)_x = R1, (g1)_y + (g2)_x = R2, (g2)_y = R3.
std::optional<std::pair<Expression, Expression>> particularThirdOrder(const Expression& potential,
                                                                      const ACoeffs& a) {
  const auto rhs = linearRightHandSides(3, potential, a);
  Expression g1 = integrate(rhs[0], Variable::X);
  Expression g2 = integrate(rhs[2], Variable::Y);
  const Expression s = rhs[1] - diff(g1, Variable::Y) - diff(g2, Variable::X);
  auto parts = separate(s);
  if (!parts) return std::nullopt;
  g1 += integrate(parts->first, Variable::Y);
  g2 += integrate(parts->second, Variable::X);
  return std::make_pair(g1, g2);
}

}  // namespace

ThirdOrderSolution solveThirdOrderIntegrals(const Expression& potential, Flavor flavor) {
  ThirdOrderSolution out;
  out.admissible = solveAdmissibleA(3, potential);

  std::vector<IntegralCandidate> params;
  for (const auto& dir : out.admissible.basis) {
    try {
      auto g = particularThirdOrder(potential, dir);
      if (!g) {
        out.representable = false;
        continue;
      }
      params.push_back(IntegralCandidate::order3(dir, g->first, g->second));
    } catch (const AlgebraError&) {
      out.representable = false;
    }
  }
  const ACoeffs none(3);
  params.push_back(IntegralCandidate::order3(none, 1, 0));
  params.push_back(IntegralCandidate::order3(none, 0, 1));
  params.push_back(IntegralCandidate::order3(none, -Expression::y(), Expression::x()));

  // Residual of each parameter, flattened to (degree term, monomial key).
  using RowKey = std::pair<std::pair<unsigned, unsigned>, MonomialKey>;
  std::vector<std::map<RowKey, GaussianRational>> columns;
  std::set<RowKey> rowKeys;
  for (const auto& p : params) {
    std::map<RowKey, GaussianRational> col;
    if (flavor == Flavor::Classical) {
      const PhasePolynomial r = poissonBracket(classicalHamiltonian(potential), classicalIntegral(p));
      for (const auto& [m, c] : r.terms())
        for (const auto& [k, v] : c.terms()) col[{{m.k, m.l}, k}] = v;
    } else {
      const WeylOperator r = commutator(quantumHamiltonian(potential), quantumIntegral(p));
      for (const auto& [d, c] : r.terms())
        for (const auto& [k, v] : c.terms()) col[{{d.a, d.b}, k}] = v;
    }
    for (const auto& [rk, v] : col) rowKeys.insert(rk);
    columns.push_back(std::move(col));
  }

  const std::vector<RowKey> rows(rowKeys.begin(), rowKeys.end());
  RationalMatrix m = RationalMatrix::Constant(static_cast<Eigen::Index>(2 * rows.size()),
                                              static_cast<Eigen::Index>(params.size()), Rational(0));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = columns[c].find(rows[r]);
      if (it == columns[c].end()) continue;
      m(static_cast<Eigen::Index>(2 * r), static_cast<Eigen::Index>(c)) = it->second.re;
      m(static_cast<Eigen::Index>(2 * r + 1), static_cast<Eigen::Index>(c)) = it->second.im;
    }
  }
  const RationalMatrix ns = nullSpace(m);

  std::vector<ACoeffs> leading;
  for (Eigen::Index v = 0; v < ns.cols(); ++v) {
    IntegralCandidate combined = IntegralCandidate::order3(ACoeffs(3), 0, 0);
    RationalVector a = RationalVector::Constant(static_cast<Eigen::Index>(ACoeffs::indices(3).size()), Rational(0));
    for (std::size_t p = 0; p < params.size(); ++p) {
      const Rational w = ns(static_cast<Eigen::Index>(p), v);
      if (w.isZero()) continue;
      a += params[p].a.toVector() * w;
      combined.g[0] += params[p].g[0] * Expression(w);
      combined.g[1] += params[p].g[1] * Expression(w);
    }
    combined.a = ACoeffs::fromVector(3, a);
    if (combined.a.isZero()) continue;
    leading.push_back(combined.a);
    out.integrals.push_back(std::move(combined));
  }
  out.genuineDimension = extraDimensions(leading, {});
  return out;
}

}  // namespace superint
