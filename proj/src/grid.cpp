#include "superint/grid.hpp"

#include <array>
#include <string>
#include <vector>

#include "superint/errors.hpp"

namespace superint {

namespace {

// Weights for offsets -w..w, before division by h^order.
std::vector<double> stencil(unsigned order) {
  switch (order) {
    case 0: return {1.0};
    case 1: return {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
    case 2: return {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
    case 3: return {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8};
    case 4: return {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6};
    default: throw DomainError("grid stencils support derivative orders up to 4, got " + std::to_string(order));
  }
}

Eigen::ArrayXXcd differentiate(const Eigen::ArrayXXcd& f, unsigned order, bool alongX, double h) {
  if (order == 0) return f;
  const std::vector<double> w = stencil(order);
  const int half = static_cast<int>(w.size() / 2);
  const double scale = 1.0 / std::pow(h, static_cast<int>(order));
  const Eigen::Index nx = f.rows(), ny = f.cols();
  Eigen::ArrayXXcd out = Eigen::ArrayXXcd::Zero(nx, ny);
  if (alongX) {
    for (Eigen::Index i = half; i < nx - half; ++i)
      for (int s = -half; s <= half; ++s)
        if (w[s + half] != 0.0) out.row(i) += w[s + half] * scale * f.row(i + s);
  } else {
    for (Eigen::Index j = half; j < ny - half; ++j)
      for (int s = -half; s <= half; ++s)
        if (w[s + half] != 0.0) out.col(j) += w[s + half] * scale * f.col(j + s);
  }
  return out;
}

}  // namespace

GridSpec GridSpec::spanning(double xmin, double xmax, Eigen::Index nx, double ymin, double ymax, Eigen::Index ny) {
  if (nx < 2 || ny < 2) throw DomainError("grid needs at least two nodes per axis");
  return {xmin, ymin, (xmax - xmin) / static_cast<double>(nx - 1), (ymax - ymin) / static_cast<double>(ny - 1)};
}

int stencilHalfWidth(unsigned order) { return static_cast<int>(stencil(order).size() / 2); }

GridFunction applyOnGrid(const WeylOperator& a, const GridFunction& psi, const GridSpec& grid, double alpha,
                         double hbar) {
  const Eigen::Index nx = psi.values.rows(), ny = psi.values.cols();
  int widest = 0;
  for (const auto& [d, c] : a.terms()) widest = std::max({widest, stencilHalfWidth(d.a), stencilHalfWidth(d.b)});
  const int band = psi.band + widest;
  if (2 * band >= nx || 2 * band >= ny)
    throw DomainError("grid too small for stencil: " + std::to_string(nx) + "x" + std::to_string(ny) +
                      " nodes with boundary band " + std::to_string(band));
  if (grid.x0 <= 0.0) throw DomainError("grid must lie in x > 0");

  GridFunction out{Eigen::ArrayXXcd::Zero(nx, ny), band};
  for (const auto& [d, c] : a.terms()) {
    const Eigen::ArrayXXcd deriv = differentiate(differentiate(psi.values, d.a, true, grid.hx), d.b, false, grid.hy);
    for (Eigen::Index i = band; i < nx - band; ++i) {
      const double x = grid.x0 + static_cast<double>(i) * grid.hx;
      for (Eigen::Index j = band; j < ny - band; ++j) {
        const double y = grid.y0 + static_cast<double>(j) * grid.hy;
        out.values(i, j) += evalNumeric(c, NumericPoint{x, y, alpha, hbar}) * deriv(i, j);
      }
    }
  }
  return out;
}

double interiorNorm(const Eigen::ArrayXXcd& values, int band, const GridSpec& grid) {
  const Eigen::Index nx = values.rows() - 2 * band, ny = values.cols() - 2 * band;
  if (nx <= 0 || ny <= 0) return 0.0;
  return std::sqrt(values.block(band, band, nx, ny).abs2().sum() * grid.hx * grid.hy);
}

}  // namespace superint
