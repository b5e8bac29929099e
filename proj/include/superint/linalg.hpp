#ifndef SUPERINT_LINALG_HPP
#define SUPERINT_LINALG_HPP

#include <Eigen/Core>
#include <vector>

#include "superint/rational.hpp"

namespace superint {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Row echelon form of an exact matrix. Rows are first scaled to primitive
/// integer rows, then eliminated fraction-free (cross multiplication followed
/// by removal of the row content), so no intermediate fractions appear.
struct EchelonForm {
  RationalMatrix rows;               // echelon rows, integer entries
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

EchelonForm echelonForm(const RationalMatrix& m);

Eigen::Index exactRank(const RationalMatrix& m);

/// Basis of {v : m v = 0}. One vector per free column, scaled to a primitive
/// integer vector whose free-column entry is positive. Columns of the result
/// are the basis vectors.
RationalMatrix nullSpace(const RationalMatrix& m);

}  // namespace superint

#endif  // SUPERINT_LINALG_HPP
