#pragma once

// Pixel rasters over the square sampling region [-extent, extent]^2.
//
// Axis convention (shared by scenes, index maps and augmentation): element
// (i, j) of a raster sits at the pixel centre
//     x_i = -extent + (i + 0.5) * h,   y_j = -extent + (j + 0.5) * h,
// with h = 2 extent / n. The first index runs along x, the second along y
// (increasing upward). Storage is row-major, so data()[i * n + j] is (i, j).

#include <Eigen/Core>

namespace scatter {

template <typename Scalar>
using Raster = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RasterXd = Raster<double>;

using Point2d = Eigen::Vector2d;

struct ContrastGrid {
  int n = 64;
  double extent = 1.0;
  RasterXd eps;  // relative permittivity, >= 1, background exactly 1

  ContrastGrid() = default;
  explicit ContrastGrid(int side, double half_width = 1.0)
      : n(side), extent(half_width), eps(RasterXd::Ones(side, side)) {}

  double cell_size() const { return 2.0 * extent / n; }
  double cell_area() const { return cell_size() * cell_size(); }
  double coordinate(int index) const { return -extent + (index + 0.5) * cell_size(); }
  Point2d center(int i, int j) const { return {coordinate(i), coordinate(j)}; }

  // Contrast eta = eps - 1 as an expression.
  auto contrast() const { return (eps.array() - 1.0).matrix(); }

  // Pixel containing p, or -1 when p falls outside the grid.
  int index_of(double coord) const {
    const double t = (coord + extent) / cell_size();
    if (t < 0.0 || t >= n) return -1;
    return static_cast<int>(t);
  }

  // Background exactly 1 and no value below it.
  bool valid() const { return eps.rows() == n && eps.cols() == n && (eps.array() >= 1.0).all(); }
};

}  // namespace scatter
