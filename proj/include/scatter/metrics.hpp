#pragma once

#include <Eigen/Core>

#include "scatter/contrast_grid.hpp"

namespace scatter {

// ||recon - truth||_2 / ||truth||_2 over all pixels. Throws DomainError for a
// zero truth or mismatched shapes.
double relative_l2(const RasterXd& recon, const RasterXd& truth);

struct SsimOptions {
  double dynamic_range = 1.5;  // L
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
};

// Mean of the local SSIM map: Gaussian window, C1 = (k1 L)^2, C2 = (k2 L)^2,
// half-sample symmetric padding at the borders.
double ssim(const RasterXd& a, const RasterXd& b, const SsimOptions& opts = {});
RasterXd ssim_map(const RasterXd& a, const RasterXd& b, const SsimOptions& opts = {});

// Anisotropic total variation normalised by the pixel count:
//   sum |a(i+1,j) - a(i,j)| + |a(i,j+1) - a(i,j)|  /  (rows * cols)
template <typename Derived>
double total_variation(const Eigen::MatrixBase<Derived>& a) {
  const auto r = a.rows(), c = a.cols();
  double tv = 0.0;
  if (r > 1) tv += (a.bottomRows(r - 1) - a.topRows(r - 1)).cwiseAbs().sum();
  if (c > 1) tv += (a.rightCols(c - 1) - a.leftCols(c - 1)).cwiseAbs().sum();
  return tv / static_cast<double>(r * c);
}

}  // namespace scatter
