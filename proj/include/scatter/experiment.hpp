#pragma once

#include <numbers>
#include <optional>

#include <Eigen/Core>

#include "scatter/contrast_grid.hpp"

namespace scatter {

// Measurement geometry: plane-wave incidences and receivers on an arc of the
// circle of radius r_meas.
struct ExperimentConfig {
  double k = 2.0 * std::numbers::pi / 0.75;
  int n_inc = 1;
  int n_rec = 32;
  double r_meas = 3.0;
  double aperture_start = 0.0;
  double aperture_end = 2.0 * std::numbers::pi;

  static ExperimentConfig full_aperture(int n_inc = 1);
  // Receivers on the upper half circle [0, pi), 16 of them.
  static ExperimentConfig half_aperture(int n_inc = 1);

  double aperture_length() const { return aperture_end - aperture_start; }
  bool is_full_aperture() const;

  // theta_r = start + r * length / n_rec, so receiver positions depend on
  // (n_rec, aperture) only.
  double receiver_angle(int r) const;
  Point2d receiver(int r) const;
  Eigen::Matrix2Xd receivers() const;

  // Trapezoid weight on the arc: aperture length * R / n_rec.
  double quadrature_weight() const { return aperture_length() * r_meas / n_rec; }

  // d_p = (cos theta_p, sin theta_p), theta_p = 2 pi p / n_inc (p is 0-based).
  Point2d incidence_direction(int p) const;

  // Throws DomainError on an invalid configuration.
  void validate(double region_extent = 1.0) const;
};

// Scattered field at the receivers for one incidence.
struct FieldRecord {
  int incidence = 0;
  Eigen::VectorXcd us;
  std::optional<Eigen::VectorXcd> uinf;
  double noise_level = 0.0;
};

// Unit directions evenly spread over the circle, q = 0..n-1.
Eigen::Matrix2Xd far_field_directions(int n_far);

}  // namespace scatter
