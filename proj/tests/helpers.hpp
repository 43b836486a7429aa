#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Core>

#include "oracles/mie.hpp"
#include "scatter/experiment.hpp"
#include "scatter/scene.hpp"
#include "scatter/special_functions.hpp"

namespace testing {

inline scatter::ContrastGrid disc(double cx, double cy, double r, double eps, int n = 64) {
  const std::array c{scatter::CircleSpec{{cx, cy}, r, eps}};
  return scatter::rasterize_circles(c, n);
}

// Mie-series field at the receivers of cfg for incidence p (disc at the origin).
inline Eigen::VectorXcd mie_at_receivers(double r, double eps, const scatter::ExperimentConfig& cfg,
                                         int p = 0) {
  const scatter::oracle::MieDisc mie{r, eps, cfg.k};
  const double theta_d = 2.0 * std::numbers::pi * p / cfg.n_inc;
  Eigen::VectorXcd out(cfg.n_rec);
  for (int q = 0; q < cfg.n_rec; ++q) out(q) = mie.scattered(cfg.r_meas, cfg.receiver_angle(q), theta_d);
  return out;
}

// First Born term k^2 sum_c G(x_r, y_c) eta_c e^{ik y_c . d} A on the pixel grid.
inline Eigen::VectorXcd born_at_receivers(const scatter::ContrastGrid& grid,
                                          const scatter::ExperimentConfig& cfg, int p = 0) {
  namespace sf = scatter::special;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(cfg.n_rec);
  const scatter::Point2d d = cfg.incidence_direction(p);
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) {
      const double eta = grid.eps(i, j) - 1.0;
      if (eta == 0.0) continue;
      const scatter::Point2d y = grid.center(i, j);
      const auto uinc = std::exp(std::complex<double>(0.0, cfg.k * y.dot(d)));
      for (int q = 0; q < cfg.n_rec; ++q) {
        out(q) += cfg.k * cfg.k * sf::green_2d<double>(cfg.receiver(q), y, cfg.k) * eta * uinc *
                  grid.cell_area();
      }
    }
  }
  return out;
}

inline double rel_err(const Eigen::VectorXcd& a, const Eigen::VectorXcd& ref) {
  return (a - ref).norm() / ref.norm();
}

}  // namespace testing
