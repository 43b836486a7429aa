#include "scatter/experiment.hpp"

#include <cmath>
#include <string>

#include "scatter/error.hpp"

namespace scatter {

ExperimentConfig ExperimentConfig::full_aperture(int n_inc) {
  ExperimentConfig cfg;
  cfg.n_inc = n_inc;
  return cfg;
}

ExperimentConfig ExperimentConfig::half_aperture(int n_inc) {
  ExperimentConfig cfg;
  cfg.n_inc = n_inc;
  cfg.n_rec = 16;
  cfg.aperture_end = std::numbers::pi;
  return cfg;
}

bool ExperimentConfig::is_full_aperture() const {
  return std::abs(aperture_length() - 2.0 * std::numbers::pi) < 1e-12;
}

double ExperimentConfig::receiver_angle(int r) const {
  return aperture_start + aperture_length() * r / n_rec;
}

Point2d ExperimentConfig::receiver(int r) const {
  const double theta = receiver_angle(r);
  return {r_meas * std::cos(theta), r_meas * std::sin(theta)};
}

Eigen::Matrix2Xd ExperimentConfig::receivers() const {
  Eigen::Matrix2Xd pts(2, n_rec);
  for (int r = 0; r < n_rec; ++r) pts.col(r) = receiver(r);
  return pts;
}

Point2d ExperimentConfig::incidence_direction(int p) const {
  const double theta = 2.0 * std::numbers::pi * p / n_inc;
  return {std::cos(theta), std::sin(theta)};
}

void ExperimentConfig::validate(double region_extent) const {
  if (!(k > 0.0)) throw DomainError("wavenumber must be positive");
  if (n_inc < 1) throw DomainError("need at least one incidence");
  if (n_rec < 1) throw DomainError("need at least one receiver");
  if (!(r_meas > std::sqrt(2.0) * region_extent)) {
    throw DomainError("measurement radius " + std::to_string(r_meas) +
                      " does not enclose the sampling region");
  }
  const double len = aperture_length();
  if (!(len > 0.0) || len > 2.0 * std::numbers::pi + 1e-12) {
    throw DomainError("aperture must be a non-empty arc of at most 2 pi");
  }
}

Eigen::Matrix2Xd far_field_directions(int n_far) {
  if (n_far < 1) throw DomainError("need at least one far-field direction");
  Eigen::Matrix2Xd dirs(2, n_far);
  for (int q = 0; q < n_far; ++q) {
    const double theta = 2.0 * std::numbers::pi * q / n_far;
    dirs.col(q) << std::cos(theta), std::sin(theta);
  }
  return dirs;
}

}  // namespace scatter
