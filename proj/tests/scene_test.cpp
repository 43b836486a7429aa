#include <array>
#include <numbers>

#include <doctest.h>

#include "scatter/augmentation.hpp"
#include "scatter/scene.hpp"

using namespace scatter;

namespace {

double at(const ContrastGrid& g, double x, double y) { return g.eps(g.index_of(x), g.index_of(y)); }

RasterXd support(const ContrastGrid& g) { return (g.eps.array() > 1.0).cast<double>().matrix(); }

}  // namespace

TEST_CASE("rasterize_circles basics") {
  const auto empty = rasterize_circles({});
  CHECK(empty.n == 64);
  CHECK((empty.eps.array() == 1.0).all());

  const std::array one{CircleSpec{{0.0, 0.0}, 0.4, 2.0}};
  const auto g = rasterize_circles(one);
  CHECK(g.eps(32, 32) == 2.0);
  CHECK(g.eps(0, 0) == 1.0);
  CHECK(g.valid());

  int brute = 0;
  for (int i = 0; i < 64; ++i) {
    for (int j = 0; j < 64; ++j) {
      if (g.center(i, j).squaredNorm() <= 0.16) ++brute;
    }
  }
  const double area_pixels = std::numbers::pi * 0.16 / (4.0 / 4096.0);
  CHECK(area_pixels == doctest::Approx(514.7).epsilon(1e-3));
  CHECK((g.eps.array() == 2.0).count() == brute);
  CHECK(std::abs(brute - area_pixels) / area_pixels < 0.05);
}

TEST_CASE("rasterize_circles: last circle wins and clipping is silent") {
  const std::array two{CircleSpec{{0.0, 0.0}, 0.5, 2.0}, CircleSpec{{0.2, 0.0}, 0.3, 3.0}};
  const auto g = rasterize_circles(two);
  CHECK(at(g, 0.2, 0.0) == 3.0);
  CHECK(at(g, -0.4, 0.0) == 2.0);
  const std::array swapped{two[1], two[0]};
  CHECK(at(rasterize_circles(swapped), 0.2, 0.0) == 2.0);

  const std::array outside{CircleSpec{{0.95, 0.95}, 0.4, 1.5}};
  const auto clipped = rasterize_circles(outside);
  CHECK(clipped.eps(63, 63) == 1.5);
  CHECK(clipped.valid());
  CHECK(rasterize_circles(two).eps == g.eps);
}

TEST_CASE("Austria profile") {
  const auto m1 = make_austria(AustriaVariant::Mnist1);
  CHECK(at(m1, 0.3, 0.6) == 3.0);
  CHECK(at(m1, 0.0, 0.25) == 1.5);
  CHECK(at(m1, 0.0, -0.2) == 1.0);

  const auto m2 = make_austria(AustriaVariant::Mnist2);
  CHECK(at(m2, -0.3, 0.6) == 1.5);
  CHECK(at(m2, 0.3, 0.6) == 2.0);
  CHECK(at(m2, 0.0, -0.65) == 2.5);

  const auto c = make_austria(AustriaVariant::CircleDataset);
  CHECK((c.eps.array() == 1.0 || c.eps.array() == 2.0).all());
  CHECK(support(c) == support(m1));
  CHECK(support(c) == support(m2));
}

TEST_CASE("letters D, S, M") {
  const auto letters = make_letters();
  REQUIRE(letters.size() == 3);
  for (const auto& g : letters) {
    CHECK(g.n == 64);
    CHECK((g.eps.array() == 1.0 || g.eps.array() == 2.0).all());
    const double fill = (g.eps.array() == 2.0).count() / 4096.0;
    CHECK(fill > 0.05);
    CHECK(fill < 0.30);
    CHECK((g.eps.topRows(2).array() == 1.0).all());
    CHECK((g.eps.bottomRows(2).array() == 1.0).all());
    CHECK((g.eps.leftCols(2).array() == 1.0).all());
    CHECK((g.eps.rightCols(2).array() == 1.0).all());
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      CHECK((support(letters[a]) - support(letters[b])).cwiseAbs().sum() > 100);
    }
  }
}

TEST_CASE("four-circle layout is four separated discs") {
  const auto g = make_four_circles();
  CHECK(g.valid());
  CHECK(at(g, -0.45, 0.45) == doctest::Approx(1.6));
  CHECK(at(g, 0.45, 0.45) == doctest::Approx(2.0));
  CHECK(at(g, -0.40, -0.45) == doctest::Approx(1.8));
  CHECK(at(g, 0.45, -0.40) == doctest::Approx(1.7));
  CHECK(at(g, 0.0, 0.0) == 1.0);
}

TEST_CASE("digit_to_grid") {
  const DigitImage zeros = DigitImage::Zero(28, 28);
  CHECK((digit_to_grid(zeros, 0.0, std::nullopt, 2.0).eps.array() == 1.0).all());

  const DigitImage ones = DigitImage::Ones(28, 28);
  const auto full = digit_to_grid(ones, 0.0, std::nullopt, 2.0);
  CHECK((full.eps.block(1, 1, 62, 62).array() == 2.0).all());

  // An asymmetric "7"-like stroke pattern.
  DigitImage img = DigitImage::Zero(28, 28);
  img.block(4, 6, 3, 16).setOnes();
  img.block(7, 17, 16, 3).setOnes();
  img.block(14, 10, 2, 6).setConstant(0.8);
  const CircleSpec circle{{-0.5, -0.5}, 0.2, 2.4};
  const auto base = digit_to_grid(img, 0.0, circle, 1.8);
  CHECK(at(base, -0.5, -0.5) == 2.4);
  CHECK((base.eps.array() == 1.8).count() > 50);

  // Top row of the image lands at the top of the region (large y).
  const auto bare = digit_to_grid(img, 0.0, std::nullopt, 1.8);
  CHECK(bare.eps.rightCols(32).sum() > bare.eps.leftCols(32).sum());

  const auto half_turn = digit_to_grid(img, std::numbers::pi, std::nullopt, 1.8);
  CHECK(half_turn.eps == rotate_pi_grid(bare.eps));
  for (int q = 1; q < 4; ++q) {
    const auto turned = digit_to_grid(img, q * std::numbers::pi / 2, std::nullopt, 1.8);
    CHECK(turned.eps == rotate_quarter_turns(bare.eps, q));
  }
}
