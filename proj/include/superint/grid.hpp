#ifndef SUPERINT_GRID_HPP
#define SUPERINT_GRID_HPP

#include <Eigen/Dense>

#include "superint/weyl_operator.hpp"

namespace superint {

/// Node (i, j) sits at (x0 + i hx, y0 + j hy); rows index x, columns y.
struct GridSpec {
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 0.0;
  double hy = 0.0;

  /// Uniform grid with nx by ny nodes spanning [xmin, xmax] x [ymin, ymax].
  static GridSpec spanning(double xmin, double xmax, Eigen::Index nx, double ymin, double ymax, Eigen::Index ny);
};

/// Sampled function; the outer `band` nodes on every side are invalid and
/// held at zero.
struct GridFunction {
  Eigen::ArrayXXcd values;
  int band = 0;
};

/// Stencil half-width used for a derivative of the given order (0 for the
/// identity, 2 for orders 1-2, 3 for orders 3-4).
int stencilHalfWidth(unsigned order);

/// Pointwise A psi by fourth-order central differences. The result band is
/// the input band plus the widest stencil used. Throws DomainError for
/// derivative orders above 4, for grids too small for the stencil, and for
/// nodes with x <= 0.
GridFunction applyOnGrid(const WeylOperator& a, const GridFunction& psi, const GridSpec& grid, double alpha,
                         double hbar);

/// Discrete L2 norm over nodes at least `band` nodes from the edge.
double interiorNorm(const Eigen::ArrayXXcd& values, int band, const GridSpec& grid);

}  // namespace superint

#endif  // SUPERINT_GRID_HPP
