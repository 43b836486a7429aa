#pragma once

#include <optional>
#include <span>
#include <vector>

#include "scatter/contrast_grid.hpp"

namespace scatter {

struct CircleSpec {
  Point2d center = Point2d::Zero();
  double radius = 0.1;
  double permittivity = 2.0;
};

// Pixel centres inside a circle take its permittivity; later circles
// overwrite earlier ones where they overlap. Circles may poke out of the
// sampling region and are clipped.
ContrastGrid rasterize_circles(std::span<const CircleSpec> circles, int n = 64,
                               double extent = 1.0);

// Two discs (r = 0.2 at (+-0.3, 0.6)) above an annulus (radii 0.3/0.6 centred
// at (0, -0.2)).
enum class AustriaVariant {
  CircleDataset,  // all parts 2.0
  Mnist1,         // discs 3.0, ring 1.5
  Mnist2,         // left disc 1.5, right disc 2.0, ring 2.5
};
ContrastGrid make_austria(AustriaVariant variant, int n = 64);

// Latin letters D, S and M with permittivity 2.0 on a 64x64 grid.
std::vector<ContrastGrid> make_letters();

// Out-of-distribution layout with four separated circles.
ContrastGrid make_four_circles(int n = 64);

// 28x28 grayscale image, (row, col) with row 0 at the top, values in [0, 1].
using DigitImage = Raster<double>;

// Upscales a digit bilinearly to n x n, thresholds at 0.5, rotates the mask
// by `rotation` radians about the grid centre (nearest neighbour), assigns
// eps_digit inside the mask and then overlays the optional circle.
ContrastGrid digit_to_grid(const DigitImage& image, double rotation,
                           const std::optional<CircleSpec>& circle, double eps_digit,
                           int n = 64);

}  // namespace scatter
