#pragma once

// Direct sampling index functions
//
//   Phi(x) = | <u^s, G(x, .)>_{L^2(arc)} |,   <f, g> = \int f conj(g),
//
// evaluated at the pixel centres of an n x n grid, plus their far-field and
// limited-aperture variants.

#include <vector>

#include <Eigen/Core>

#include "scatter/contrast_grid.hpp"
#include "scatter/experiment.hpp"

namespace scatter {

// One index map per incidence, in incidence order.
struct IndexTensor {
  int n_inc = 0;
  int n = 0;
  std::vector<RasterXd> channels;
  double scale_c = 0.0;  // 0 while unscaled

  double max_value() const;
};

// Rows are grid points (i * n + j), columns receivers:
// K(ij, r) = conj(G(x_ij, y_r)) * w with w = aperture length * R / N_r,
// so Phi = |K us|. The matrix is shared by every record of a configuration.
class SamplingKernel {
 public:
  SamplingKernel(const ExperimentConfig& cfg, int n, double extent = 1.0);

  RasterXd index(const Eigen::VectorXcd& us) const;
  RasterXd index_normalized(const Eigen::VectorXcd& us) const;

  const Eigen::MatrixXcd& matrix() const { return kernel_; }
  int side() const { return n_; }
  double weight() const { return weight_; }

 private:
  int n_;
  double weight_;
  Eigen::MatrixXcd kernel_;
  Eigen::VectorXd green_norms_;  // ||G(x, .)||_{L^2(arc)} per grid point
};

RasterXd index_near(const FieldRecord& rec, const ExperimentConfig& cfg, int n);

// Throws DomainError for a vanishing field.
RasterXd index_near_normalized(const FieldRecord& rec, const ExperimentConfig& cfg, int n);

// Far-field index with weight 2 pi / n_far; dirs are unit column vectors.
RasterXd index_far(const Eigen::VectorXcd& uinf, const Eigen::Matrix2Xd& dirs,
                   const ExperimentConfig& cfg, int n);
RasterXd index_far_normalized(const Eigen::VectorXcd& uinf, const Eigen::Matrix2Xd& dirs,
                              const ExperimentConfig& cfg, int n);

// Index on a proper sub-arc of the measurement circle (e.g. the upper half).
RasterXd index_limited(const FieldRecord& rec, const ExperimentConfig& cfg, int n);

// Stacks index maps of all incidences (records in incidence order).
IndexTensor index_tensor(const std::vector<FieldRecord>& records, const SamplingKernel& kernel);
IndexTensor index_tensor(const std::vector<FieldRecord>& records, const ExperimentConfig& cfg,
                         int n);

// Multiplies every entry by 2 / c and records c.
IndexTensor scale_tensor(const IndexTensor& t, double c);

struct ConvergenceEntry {
  double radius;
  double median_ratio;  // empirical C_N
  double deviation;     // s(R)
};

// For each radius R, compares Phi^R (receivers on the circle of radius R)
// with the far-field index at the probe points:
//   s(R) = max_x |Phi^R(x) / median(Phi^R / Phi^inf) - Phi^inf(x)| / max Phi^inf.
// Uses incidence 0 of cfg, cfg.n_rec receivers and as many far-field
// directions.
std::vector<ConvergenceEntry> convergence_check(const ContrastGrid& grid,
                                                const ExperimentConfig& cfg,
                                                const std::vector<double>& radii,
                                                const std::vector<Point2d>& probe_points);

struct SingularValueRange {
  double sigma_min;
  double sigma_max;
};

// Extreme singular values of the discretised operator u -> <u, G(x, .)> from
// receiver data to an n x n probe grid.
SingularValueRange injectivity_rank(const ExperimentConfig& cfg, int n);
SingularValueRange singular_value_range(const Eigen::MatrixXcd& operator_matrix);

}  // namespace scatter
