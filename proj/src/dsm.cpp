#include "scatter/dsm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "scatter/error.hpp"
#include "scatter/forward.hpp"
#include "scatter/special_functions.hpp"

namespace scatter {

double IndexTensor::max_value() const {
  double m = 0.0;
  for (const auto& ch : channels) m = std::max(m, ch.maxCoeff());
  return m;
}

SamplingKernel::SamplingKernel(const ExperimentConfig& cfg, int n, double extent)
    : n_(n), weight_(cfg.quadrature_weight()) {
  cfg.validate(extent);
  const ContrastGrid probe(n, extent);
  const Eigen::Matrix2Xd rec = cfg.receivers();
  kernel_.resize(static_cast<Eigen::Index>(n) * n, cfg.n_rec);
  green_norms_.resize(kernel_.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::Index row = static_cast<Eigen::Index>(i) * n + j;
      const Point2d x = probe.center(i, j);
      double sq = 0.0;
      for (int r = 0; r < cfg.n_rec; ++r) {
        const auto g = special::green_2d<double>(x, rec.col(r), cfg.k);
        kernel_(row, r) = std::conj(g) * weight_;
        sq += std::norm(g);
      }
      green_norms_(row) = std::sqrt(weight_ * sq);
    }
  }
}

RasterXd SamplingKernel::index(const Eigen::VectorXcd& us) const {
  if (us.size() != kernel_.cols()) {
    throw DomainError("field record length does not match the receiver count");
  }
  const Eigen::VectorXd values = (kernel_ * us).cwiseAbs();
  return Eigen::Map<const RasterXd>(values.data(), n_, n_);
}

RasterXd SamplingKernel::index_normalized(const Eigen::VectorXcd& us) const {
  const double field_norm = std::sqrt(weight_) * us.norm();
  if (!(field_norm > 0.0)) {
    throw DomainError("normalized index undefined for a zero field");
  }
  const Eigen::VectorXd values =
      (kernel_ * us).cwiseAbs().cwiseQuotient(green_norms_) / field_norm;
  return Eigen::Map<const RasterXd>(values.data(), n_, n_);
}

RasterXd index_near(const FieldRecord& rec, const ExperimentConfig& cfg, int n) {
  return SamplingKernel(cfg, n).index(rec.us);
}

RasterXd index_near_normalized(const FieldRecord& rec, const ExperimentConfig& cfg, int n) {
  return SamplingKernel(cfg, n).index_normalized(rec.us);
}

namespace {

Eigen::MatrixXcd far_kernel(const Eigen::Matrix2Xd& dirs, const ExperimentConfig& cfg, int n,
                            Eigen::VectorXd* norms) {
  if (dirs.cols() < 1) throw DomainError("need at least one far-field direction");
  const double w = 2.0 * std::numbers::pi / static_cast<double>(dirs.cols());
  const ContrastGrid probe(n);
  Eigen::MatrixXcd kernel(static_cast<Eigen::Index>(n) * n, dirs.cols());
  if (norms) norms->resize(kernel.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Eigen::Index row = static_cast<Eigen::Index>(i) * n + j;
      double sq = 0.0;
      for (Eigen::Index q = 0; q < dirs.cols(); ++q) {
        const auto g = special::green_far_2d<double>(probe.center(i, j), dirs.col(q), cfg.k);
        kernel(row, q) = std::conj(g) * w;
        sq += std::norm(g);
      }
      if (norms) (*norms)(row) = std::sqrt(w * sq);
    }
  }
  return kernel;
}

}  // namespace

RasterXd index_far(const Eigen::VectorXcd& uinf, const Eigen::Matrix2Xd& dirs,
                   const ExperimentConfig& cfg, int n) {
  if (uinf.size() != dirs.cols()) throw DomainError("far field and directions differ in length");
  const Eigen::VectorXd values = (far_kernel(dirs, cfg, n, nullptr) * uinf).cwiseAbs();
  return Eigen::Map<const RasterXd>(values.data(), n, n);
}

RasterXd index_far_normalized(const Eigen::VectorXcd& uinf, const Eigen::Matrix2Xd& dirs,
                              const ExperimentConfig& cfg, int n) {
  if (uinf.size() != dirs.cols()) throw DomainError("far field and directions differ in length");
  const double w = 2.0 * std::numbers::pi / static_cast<double>(dirs.cols());
  const double field_norm = std::sqrt(w) * uinf.norm();
  if (!(field_norm > 0.0)) throw DomainError("normalized index undefined for a zero field");
  Eigen::VectorXd norms;
  const auto kernel = far_kernel(dirs, cfg, n, &norms);
  const Eigen::VectorXd values = (kernel * uinf).cwiseAbs().cwiseQuotient(norms) / field_norm;
  return Eigen::Map<const RasterXd>(values.data(), n, n);
}

RasterXd index_limited(const FieldRecord& rec, const ExperimentConfig& cfg, int n) {
  if (cfg.is_full_aperture()) {
    throw DomainError("index_limited expects a partial aperture");
  }
  return SamplingKernel(cfg, n).index(rec.us);
}

IndexTensor index_tensor(const std::vector<FieldRecord>& records, const SamplingKernel& kernel) {
  IndexTensor t;
  t.n_inc = static_cast<int>(records.size());
  t.n = kernel.side();
  t.channels.reserve(records.size());
  for (const auto& rec : records) t.channels.push_back(kernel.index(rec.us));
  return t;
}

IndexTensor index_tensor(const std::vector<FieldRecord>& records, const ExperimentConfig& cfg,
                         int n) {
  return index_tensor(records, SamplingKernel(cfg, n));
}

IndexTensor scale_tensor(const IndexTensor& t, double c) {
  if (!(c > 0.0)) throw DomainError("scaling constant must be positive");
  IndexTensor out = t;
  const double factor = 2.0 / c;
  for (auto& ch : out.channels) ch *= factor;
  out.scale_c = t.scale_c > 0.0 ? t.scale_c * c / 2.0 : c;
  return out;
}

namespace {

double median(std::vector<double> v) {
  const auto mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
  }
  return m;
}

}  // namespace

std::vector<ConvergenceEntry> convergence_check(const ContrastGrid& grid,
                                                const ExperimentConfig& cfg,
                                                const std::vector<double>& radii,
                                                const std::vector<Point2d>& probe_points) {
  if (probe_points.empty()) throw DomainError("convergence check needs probe points");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > std::sqrt(2.0) * grid.extent)) {
      throw DomainError("convergence radii must enclose the sampling region");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw DomainError("convergence radii must be increasing");
    }
  }

  const SolveResult res = solve_forward(grid, cfg, 0);
  const Eigen::Matrix2Xd dirs = far_field_directions(cfg.n_rec);
  const Eigen::VectorXcd uinf = far_field(res, grid, cfg, cfg.n_rec);
  const double w_far = 2.0 * std::numbers::pi / cfg.n_rec;

  const auto np = probe_points.size();
  std::vector<double> phi_far(np);
  for (std::size_t i = 0; i < np; ++i) {
    std::complex<double> acc = 0.0;
    for (int q = 0; q < cfg.n_rec; ++q) {
      acc += uinf(q) * std::conj(special::green_far_2d<double>(probe_points[i], dirs.col(q), cfg.k));
    }
    phi_far[i] = std::abs(acc * w_far);
  }
  const double far_max = *std::max_element(phi_far.begin(), phi_far.end());
  if (!(far_max > 0.0)) throw DomainError("far-field index vanishes at every probe point");

  std::vector<ConvergenceEntry> report;
  for (const double radius : radii) {
    ExperimentConfig at_r = cfg;
    at_r.r_meas = radius;
    const FieldRecord rec = scattered_at_receivers(res, grid, at_r);
    const double w = at_r.quadrature_weight();
    std::vector<double> phi_r(np), ratio;
    for (std::size_t i = 0; i < np; ++i) {
      std::complex<double> acc = 0.0;
      for (int r = 0; r < at_r.n_rec; ++r) {
        acc += rec.us(r) * std::conj(special::green_2d<double>(probe_points[i], at_r.receiver(r), cfg.k));
      }
      phi_r[i] = std::abs(acc * w);
      if (phi_far[i] > 0.0) ratio.push_back(phi_r[i] / phi_far[i]);
    }
    const double c_n = median(ratio);
    double dev = 0.0;
    for (std::size_t i = 0; i < np; ++i) {
      dev = std::max(dev, std::abs(phi_r[i] / c_n - phi_far[i]));
    }
    report.push_back({radius, c_n, dev / far_max});
  }
  return report;
}

SingularValueRange singular_value_range(const Eigen::MatrixXcd& operator_matrix) {
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(operator_matrix);
  const auto& s = svd.singularValues();
  return {s.minCoeff(), s.maxCoeff()};
}

SingularValueRange injectivity_rank(const ExperimentConfig& cfg, int n) {
  if (cfg.n_rec > n * n) throw DomainError("probe grid must have at least n_rec points");
  return singular_value_range(SamplingKernel(cfg, n).matrix());
}

}  // namespace scatter
