#include "superint/linalg.hpp"

#include <utility>

namespace superint {

namespace {

// Scales a row to a primitive integer vector (gcd of entries 1); sign kept.
template <class RowType>
void makePrimitive(RowType&& row) {
  mpz_class l = 1;
  for (Eigen::Index j = 0; j < row.size(); ++j)
    if (!row(j).isZero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row(j).denominator().get_mpz_t());
  mpz_class g = 0;
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (row(j).isZero()) continue;
    row(j) *= Rational(l, mpz_class(1));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row(j).numerator().get_mpz_t());
  }
  if (g == 0 || g == 1) return;
  const Rational inv(mpz_class(1), g);
  for (Eigen::Index j = 0; j < row.size(); ++j)
    if (!row(j).isZero()) row(j) *= inv;
}

}  // namespace

EchelonForm echelonForm(const RationalMatrix& m) {
  EchelonForm out;
  RationalMatrix a = m;
  const Eigen::Index nr = a.rows();
  const Eigen::Index nc = a.cols();
  for (Eigen::Index r = 0; r < nr; ++r) makePrimitive(a.row(r));

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < nc && row < nr; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < nr; ++r) {
      if (!a(r, col).isZero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Rational p = a(row, col);
    for (Eigen::Index r = row + 1; r < nr; ++r) {
      if (a(r, col).isZero()) continue;
      const Rational f = a(r, col);
      for (Eigen::Index j = col; j < nc; ++j) a(r, j) = p * a(r, j) - f * a(row, j);
      makePrimitive(a.row(r));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rows = a.topRows(row);
  return out;
}

Eigen::Index exactRank(const RationalMatrix& m) { return echelonForm(m).rank(); }

RationalMatrix nullSpace(const RationalMatrix& m) {
  const EchelonForm e = echelonForm(m);
  const Eigen::Index nc = m.cols();
  std::vector<bool> isPivot(static_cast<std::size_t>(nc), false);
  for (auto c : e.pivots) isPivot[static_cast<std::size_t>(c)] = true;

  std::vector<Eigen::Index> freeCols;
  for (Eigen::Index c = 0; c < nc; ++c)
    if (!isPivot[static_cast<std::size_t>(c)]) freeCols.push_back(c);

  RationalMatrix basis(nc, static_cast<Eigen::Index>(freeCols.size()));
  for (Eigen::Index b = 0; b < basis.cols(); ++b) {
    RationalVector v = RationalVector::Constant(nc, Rational(0));
    v(freeCols[static_cast<std::size_t>(b)]) = Rational(1);
    for (Eigen::Index r = e.rank() - 1; r >= 0; --r) {
      const Eigen::Index pc = e.pivots[static_cast<std::size_t>(r)];
      Rational s = 0;
      for (Eigen::Index j = pc + 1; j < nc; ++j)
        if (!e.rows(r, j).isZero() && !v(j).isZero()) s += e.rows(r, j) * v(j);
      v(pc) = -s / e.rows(r, pc);
    }
    makePrimitive(v);
    basis.col(b) = v;
  }
  return basis;
}

}  // namespace superint
