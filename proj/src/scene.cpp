#include "scatter/scene.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string_view>

namespace scatter {

namespace detail {
extern const std::array<std::array<std::string_view, 16>, 3> kLetterGlyphs;
}

namespace {

void paint_disc(ContrastGrid& grid, const Point2d& center, double radius, double value) {
  const double r2 = radius * radius;
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) {
      if ((grid.center(i, j) - center).squaredNorm() <= r2) grid.eps(i, j) = value;
    }
  }
}

void paint_annulus(ContrastGrid& grid, const Point2d& center, double inner, double outer,
                   double value) {
  for (int i = 0; i < grid.n; ++i) {
    for (int j = 0; j < grid.n; ++j) {
      const double d2 = (grid.center(i, j) - center).squaredNorm();
      if (d2 <= outer * outer && d2 >= inner * inner) grid.eps(i, j) = value;
    }
  }
}

}  // namespace

ContrastGrid rasterize_circles(std::span<const CircleSpec> circles, int n, double extent) {
  ContrastGrid grid(n, extent);
  for (const auto& c : circles) paint_disc(grid, c.center, c.radius, c.permittivity);
  return grid;
}

ContrastGrid make_austria(AustriaVariant variant, int n) {
  double left = 2.0, right = 2.0, ring = 2.0;
  switch (variant) {
    case AustriaVariant::CircleDataset: break;
    case AustriaVariant::Mnist1: left = right = 3.0; ring = 1.5; break;
    case AustriaVariant::Mnist2: left = 1.5; right = 2.0; ring = 2.5; break;
  }
  ContrastGrid grid(n);
  paint_disc(grid, {-0.3, 0.6}, 0.2, left);
  paint_disc(grid, {0.3, 0.6}, 0.2, right);
  paint_annulus(grid, {0.0, -0.2}, 0.3, 0.6, ring);
  return grid;
}

std::vector<ContrastGrid> make_letters() {
  constexpr int kSide = 64;
  constexpr int kBlock = 4;
  std::vector<ContrastGrid> letters;
  for (const auto& glyph : detail::kLetterGlyphs) {
    ContrastGrid grid(kSide);
    for (int i = 0; i < kSide; ++i) {
      for (int j = 0; j < kSide; ++j) {
        const int row = 15 - j / kBlock;  // glyph rows run top to bottom
        const int col = i / kBlock;
        if (glyph[row][col] == '#') grid.eps(i, j) = 2.0;
      }
    }
    letters.push_back(std::move(grid));
  }
  return letters;
}

ContrastGrid make_four_circles(int n) {
  const std::array<CircleSpec, 4> circles = {{
      {{-0.45, 0.45}, 0.20, 1.6},
      {{0.45, 0.45}, 0.25, 2.0},
      {{-0.40, -0.45}, 0.25, 1.8},
      {{0.45, -0.40}, 0.18, 1.7},
  }};
  return rasterize_circles(circles, n);
}

namespace {

// Bilinear sample of the image at continuous (row, col), clamped at edges.
double bilinear(const DigitImage& img, double row, double col) {
  const auto rows = img.rows(), cols = img.cols();
  row = std::clamp(row, 0.0, static_cast<double>(rows - 1));
  col = std::clamp(col, 0.0, static_cast<double>(cols - 1));
  const auto r0 = static_cast<Eigen::Index>(std::floor(row));
  const auto c0 = static_cast<Eigen::Index>(std::floor(col));
  const auto r1 = std::min(r0 + 1, rows - 1);
  const auto c1 = std::min(c0 + 1, cols - 1);
  const double fr = row - r0, fc = col - c0;
  return (1 - fr) * ((1 - fc) * img(r0, c0) + fc * img(r0, c1)) +
         fr * ((1 - fc) * img(r1, c0) + fc * img(r1, c1));
}

}  // namespace

ContrastGrid digit_to_grid(const DigitImage& image, double rotation,
                           const std::optional<CircleSpec>& circle, double eps_digit, int n) {
  ContrastGrid grid(n);

  // Upscaled, thresholded mask in grid orientation: column -> x, row -> -y.
  Raster<bool> mask(n, n);
  const double row_scale = static_cast<double>(image.rows()) / n;
  const double col_scale = static_cast<double>(image.cols()) / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int out_row = n - 1 - j;
      const double src_row = (out_row + 0.5) * row_scale - 0.5;
      const double src_col = (i + 0.5) * col_scale - 0.5;
      mask(i, j) = bilinear(image, src_row, src_col) >= 0.5;
    }
  }

  // Rotated mask: out(x) = mask(R_{-rotation} x), nearest pixel.
  const double c = std::cos(rotation), s = std::sin(rotation);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Point2d p = grid.center(i, j);
      const double sx = c * p.x() + s * p.y();
      const double sy = -s * p.x() + c * p.y();
      const int si = grid.index_of(sx), sj = grid.index_of(sy);
      if (si >= 0 && sj >= 0 && mask(si, sj)) grid.eps(i, j) = eps_digit;
    }
  }

  if (circle) paint_disc(grid, circle->center, circle->radius, circle->permittivity);
  return grid;
}

}  // namespace scatter
