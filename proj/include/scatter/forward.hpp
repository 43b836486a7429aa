#pragma once

// Moment-method solver for the 2D Lippmann-Schwinger equation
//
//     u(x) = u_inc(x) + k^2 \int_Omega G(x, y) eta(y) u(y) dy
//
// with pulse basis functions on the pixels and collocation at pixel centres.
// Only pixels with eta > 0 carry unknowns: the induced current eta*u vanishes
// everywhere else, so dropping those rows and columns is exact.

#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "scatter/contrast_grid.hpp"
#include "scatter/experiment.hpp"

namespace scatter {

struct SolveOptions {
  enum class OffDiagonal {
    Midpoint,      // G(x_m, y_c) * A
    DiscAveraged,  // G averaged over the equal-area disc of cell c
  };
  OffDiagonal off_diagonal = OffDiagonal::Midpoint;
  // false keeps every pixel as an unknown (reference mode for tests).
  bool support_only = true;
  double residual_tolerance = 1e-10;
};

struct SolveResult {
  int incidence = 0;
  std::vector<int> support_cells;  // linear pixel index i * n + j
  Eigen::VectorXcd total_field;
  Eigen::VectorXcd induced_current;  // eta * total_field, cell by cell
};

// e^{i k x . d_p}
std::complex<double> incident_field(const Point2d& x, const ExperimentConfig& cfg, int p);

// Exact integral of G(x_c, .) over the disc of radius a centred at x_c.
std::complex<double> self_cell_integral(double k, double a);

// Assembles (I - k^2 G diag(eta)) once and factors it; each incidence is then
// one triangular solve.
class MomentSystem {
 public:
  MomentSystem(const ContrastGrid& grid, const ExperimentConfig& cfg, SolveOptions opts = {});

  // Throws SolverError when the residual check fails.
  SolveResult solve(int p) const;
  std::vector<SolveResult> solve_all() const;

  const std::vector<int>& cells() const { return cells_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(cells_.size()); }

 private:
  ContrastGrid grid_;
  ExperimentConfig cfg_;
  SolveOptions opts_;
  std::vector<int> cells_;
  Eigen::VectorXd eta_;
  Eigen::MatrixXcd system_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

SolveResult solve_forward(const ContrastGrid& grid, const ExperimentConfig& cfg, int p,
                          SolveOptions opts = {});

// u^s at the receivers: k^2 sum_c G(x_r, y_c) I_c A.
FieldRecord scattered_at_receivers(const SolveResult& res, const ContrastGrid& grid,
                                   const ExperimentConfig& cfg);

// Same for several incidences sharing one support; the receiver/cell Green's
// matrix is built once.
std::vector<FieldRecord> scattered_at_receivers(const std::vector<SolveResult>& results,
                                                const ContrastGrid& grid,
                                                const ExperimentConfig& cfg);

// u^inf(yhat_q) = k^2 sum_c G^inf(y_c, yhat_q) I_c A on n_far equispaced
// directions.
Eigen::VectorXcd far_field(const SolveResult& res, const ContrastGrid& grid,
                           const ExperimentConfig& cfg, int n_far);

// us + delta * rms(us) * (zeta_r + i zeta_i) / sqrt(2), zeta ~ N(0, 1) i.i.d.
// per receiver, drawn in receiver order (real part first). rms(us) =
// ||us||_2 / sqrt(N_r), so the expected relative perturbation is delta.
FieldRecord add_noise(const FieldRecord& rec, double delta, std::uint64_t seed);

}  // namespace scatter
