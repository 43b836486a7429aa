#include "scatter/forward.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "scatter/error.hpp"
#include "scatter/random.hpp"
#include "scatter/special_functions.hpp"

namespace scatter {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

cd incident_field(const Point2d& x, const ExperimentConfig& cfg, int p) {
  return std::exp(kI * (cfg.k * x.dot(cfg.incidence_direction(p))));
}

cd self_cell_integral(double k, double a) {
  // int_0^a (i/4) H0(k rho) 2 pi rho d rho = i pi a H1(ka) / (2k) - 1/k^2
  const double pi = std::numbers::pi;
  return kI * pi * a * special::hankel1_1(k * a) / (2.0 * k) - 1.0 / (k * k);
}

namespace {

// Integrated Green's function between cells offset by (di, dj) >= 0, for
// every offset on an n x n grid. Entry (0, 0) is the self term.
Raster<cd> cell_coupling_table(const ContrastGrid& grid, double k,
                               SolveOptions::OffDiagonal mode) {
  const int n = grid.n;
  const double h = grid.cell_size();
  const double area = grid.cell_area();
  const double a = std::sqrt(area / std::numbers::pi);
  const cd disc_factor = kI * std::numbers::pi * a / (2.0 * k) * special::bessel_j1(k * a);
  Raster<cd> table(n, n);
  for (int di = 0; di < n; ++di) {
    for (int dj = 0; dj < n; ++dj) {
      if (di == 0 && dj == 0) {
        table(0, 0) = self_cell_integral(k, a);
        continue;
      }
      const double r = h * std::hypot(static_cast<double>(di), static_cast<double>(dj));
      const cd h0 = special::hankel1_0(k * r);
      table(di, dj) = mode == SolveOptions::OffDiagonal::Midpoint ? 0.25 * kI * h0 * area
                                                                   : disc_factor * h0;
    }
  }
  return table;
}

}  // namespace

MomentSystem::MomentSystem(const ContrastGrid& grid, const ExperimentConfig& cfg,
                           SolveOptions opts)
    : grid_(grid), cfg_(cfg), opts_(opts) {
  cfg_.validate(grid_.extent);
  if (!grid_.valid()) throw DomainError("contrast grid has values below the background 1");

  const int n = grid_.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!opts_.support_only || grid_.eps(i, j) > 1.0) cells_.push_back(i * n + j);
    }
  }
  const auto m = size();
  eta_.resize(m);
  for (Eigen::Index c = 0; c < m; ++c) eta_(c) = grid_.eps.data()[cells_[c]] - 1.0;
  if (m == 0) return;

  const auto table = cell_coupling_table(grid_, cfg_.k, opts_.off_diagonal);
  const double k2 = cfg_.k * cfg_.k;
  system_.resize(m, m);
  for (Eigen::Index col = 0; col < m; ++col) {
    const int ci = cells_[col] / n, cj = cells_[col] % n;
    for (Eigen::Index row = 0; row < m; ++row) {
      const int ri = cells_[row] / n, rj = cells_[row] % n;
      const cd g = table(std::abs(ri - ci), std::abs(rj - cj));
      system_(row, col) = (row == col ? 1.0 : 0.0) - k2 * eta_(col) * g;
    }
  }
  lu_.compute(system_);
}

SolveResult MomentSystem::solve(int p) const {
  if (p < 0 || p >= cfg_.n_inc) {
    throw DomainError("incidence index " + std::to_string(p) + " out of range");
  }
  SolveResult res;
  res.incidence = p;
  res.support_cells = cells_;
  const auto m = size();
  if (m == 0) return res;

  const int n = grid_.n;
  Eigen::VectorXcd rhs(m);
  for (Eigen::Index c = 0; c < m; ++c) {
    rhs(c) = incident_field(grid_.center(cells_[c] / n, cells_[c] % n), cfg_, p);
  }
  res.total_field = lu_.solve(rhs);
  const double residual = (system_ * res.total_field - rhs).norm();
  if (!(residual <= opts_.residual_tolerance * rhs.norm())) {
    throw SolverError("moment system residual " + std::to_string(residual) +
                          " exceeds tolerance",
                      residual);
  }
  res.induced_current = eta_.cast<cd>().cwiseProduct(res.total_field);
  return res;
}

std::vector<SolveResult> MomentSystem::solve_all() const {
  std::vector<SolveResult> out;
  out.reserve(cfg_.n_inc);
  for (int p = 0; p < cfg_.n_inc; ++p) out.push_back(solve(p));
  return out;
}

SolveResult solve_forward(const ContrastGrid& grid, const ExperimentConfig& cfg, int p,
                          SolveOptions opts) {
  return MomentSystem(grid, cfg, opts).solve(p);
}

namespace {

// k^2 A G(x_r, y_c), receivers by cells.
Eigen::MatrixXcd receiver_matrix(const std::vector<int>& cells, const ContrastGrid& grid,
                                 const ExperimentConfig& cfg) {
  const auto m = static_cast<Eigen::Index>(cells.size());
  Eigen::MatrixXcd mat(cfg.n_rec, m);
  const double scale = cfg.k * cfg.k * grid.cell_area();
  for (int r = 0; r < cfg.n_rec; ++r) {
    const Point2d xr = cfg.receiver(r);
    for (Eigen::Index c = 0; c < m; ++c) {
      const Point2d yc = grid.center(cells[c] / grid.n, cells[c] % grid.n);
      mat(r, c) = scale * special::green_2d(xr, yc, cfg.k);
    }
  }
  return mat;
}

}  // namespace

FieldRecord scattered_at_receivers(const SolveResult& res, const ContrastGrid& grid,
                                   const ExperimentConfig& cfg) {
  FieldRecord rec;
  rec.incidence = res.incidence;
  if (res.support_cells.empty()) {
    rec.us = Eigen::VectorXcd::Zero(cfg.n_rec);
    return rec;
  }
  rec.us = receiver_matrix(res.support_cells, grid, cfg) * res.induced_current;
  return rec;
}

std::vector<FieldRecord> scattered_at_receivers(const std::vector<SolveResult>& results,
                                                const ContrastGrid& grid,
                                                const ExperimentConfig& cfg) {
  std::vector<FieldRecord> out;
  if (results.empty()) return out;
  const auto& cells = results.front().support_cells;
  Eigen::MatrixXcd mat;
  if (!cells.empty()) mat = receiver_matrix(cells, grid, cfg);
  for (const auto& res : results) {
    if (res.support_cells != cells) {
      throw DomainError("batched receiver evaluation needs a common support");
    }
    FieldRecord rec;
    rec.incidence = res.incidence;
    rec.us = cells.empty() ? Eigen::VectorXcd::Zero(cfg.n_rec).eval()
                           : (mat * res.induced_current).eval();
    out.push_back(std::move(rec));
  }
  return out;
}

Eigen::VectorXcd far_field(const SolveResult& res, const ContrastGrid& grid,
                           const ExperimentConfig& cfg, int n_far) {
  const Eigen::Matrix2Xd dirs = far_field_directions(n_far);
  Eigen::VectorXcd uinf = Eigen::VectorXcd::Zero(n_far);
  const double scale = cfg.k * cfg.k * grid.cell_area();
  for (int q = 0; q < n_far; ++q) {
    const Point2d yhat = dirs.col(q);
    cd acc = 0.0;
    for (std::size_t c = 0; c < res.support_cells.size(); ++c) {
      const int cell = res.support_cells[c];
      acc += special::green_far_2d(grid.center(cell / grid.n, cell % grid.n), yhat, cfg.k) *
             res.induced_current(static_cast<Eigen::Index>(c));
    }
    uinf(q) = scale * acc;
  }
  return uinf;
}

FieldRecord add_noise(const FieldRecord& rec, double delta, std::uint64_t seed) {
  if (!(delta >= 0.0)) throw DomainError("noise level must be non-negative");
  FieldRecord out = rec;
  out.noise_level = delta;
  if (delta == 0.0) {
    out.noise_level = rec.noise_level;
    return out;
  }
  const auto n = rec.us.size();
  const double rms = n > 0 ? rec.us.norm() / std::sqrt(static_cast<double>(n)) : 0.0;
  const double scale = delta * rms / std::sqrt(2.0);
  Rng rng(seed);
  for (Eigen::Index r = 0; r < n; ++r) {
    const double zr = rng.normal();
    const double zi = rng.normal();
    out.us(r) += scale * cd(zr, zi);
  }
  return out;
}

}  // namespace scatter
