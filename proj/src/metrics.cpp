#include "scatter/metrics.hpp"

#include <cmath>
#include <vector>

#include "scatter/error.hpp"

namespace scatter {

namespace {

void require_same_shape(const RasterXd& a, const RasterXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("images differ in shape");
  }
}

// Half-sample symmetric index: ... b a | a b c ... c b a | a ...
Eigen::Index reflect(Eigen::Index i, Eigen::Index n) {
  const Eigen::Index period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

std::vector<double> gaussian_kernel(int size, double sigma) {
  std::vector<double> w(size);
  const double half = (size - 1) / 2.0;
  double sum = 0.0;
  for (int t = 0; t < size; ++t) {
    const double d = t - half;
    w[t] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += w[t];
  }
  for (auto& v : w) v /= sum;
  return w;
}

// Separable Gaussian filter with symmetric padding.
RasterXd blur(const RasterXd& img, const std::vector<double>& w) {
  const auto rows = img.rows(), cols = img.cols();
  const auto half = static_cast<Eigen::Index>(w.size() / 2);
  RasterXd tmp(rows, cols), out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < w.size(); ++t) {
        acc += w[t] * img(reflect(i + static_cast<Eigen::Index>(t) - half, rows), j);
      }
      tmp(i, j) = acc;
    }
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < w.size(); ++t) {
        acc += w[t] * tmp(i, reflect(j + static_cast<Eigen::Index>(t) - half, cols));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace

double relative_l2(const RasterXd& recon, const RasterXd& truth) {
  require_same_shape(recon, truth);
  const double denom = truth.norm();
  if (!(denom > 0.0)) throw DomainError("relative_l2: truth has zero norm");
  return (recon - truth).norm() / denom;
}

RasterXd ssim_map(const RasterXd& a, const RasterXd& b, const SsimOptions& opts) {
  require_same_shape(a, b);
  if (!(opts.dynamic_range > 0.0)) throw DomainError("ssim: dynamic range must be positive");
  const auto w = gaussian_kernel(opts.window, opts.sigma);
  const double c1 = std::pow(opts.k1 * opts.dynamic_range, 2);
  const double c2 = std::pow(opts.k2 * opts.dynamic_range, 2);

  const RasterXd mu_a = blur(a, w), mu_b = blur(b, w);
  // Second moments of the mean-free images: same variances, less cancellation.
  const RasterXd ca = (a.array() - a.mean()).matrix(), cb = (b.array() - b.mean()).matrix();
  const RasterXd mu_ca = blur(ca, w), mu_cb = blur(cb, w);
  const RasterXd aa = blur(ca.cwiseProduct(ca), w);
  const RasterXd bb = blur(cb.cwiseProduct(cb), w);
  const RasterXd ab = blur(ca.cwiseProduct(cb), w);

  const auto ma = mu_a.array(), mb = mu_b.array();
  const auto var_a = aa.array() - mu_ca.array().square();
  const auto var_b = bb.array() - mu_cb.array().square();
  const auto cov = ab.array() - mu_ca.array() * mu_cb.array();
  return (((2.0 * ma * mb + c1) * (2.0 * cov + c2)) /
          ((ma.square() + mb.square() + c1) * (var_a + var_b + c2)))
      .matrix();
}

double ssim(const RasterXd& a, const RasterXd& b, const SsimOptions& opts) {
  return ssim_map(a, b, opts).mean();
}

}  // namespace scatter
