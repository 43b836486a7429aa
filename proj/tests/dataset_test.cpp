#include <set>

#include <boost/math/distributions/chi_squared.hpp>
#include <doctest.h>

#include "scatter/dataset.hpp"
#include "scatter/dsm.hpp"
#include "scatter/error.hpp"
#include "scatter/forward.hpp"

using namespace scatter;

namespace {

GenParams small(Family family, std::uint64_t seed) {
  GenParams p;
  p.family = family;
  p.n_train = 3;
  p.n_val = 2;
  p.n_test = 2;
  p.n = 16;
  p.cfg.n_inc = 2;
  p.cfg.n_rec = 12;
  p.master_seed = seed;
  p.threads = 1;
  return p;
}

}  // namespace

TEST_CASE("regeneration from a seed is bit-identical and independent of threads") {
  auto p = small(Family::Circles, 42);
  const auto a = encode_container(generate_dataset(p));
  p.threads = 4;
  const auto b = encode_container(generate_dataset(p));
  CHECK(a == b);
  p.master_seed = 43;
  CHECK(encode_container(generate_dataset(p)) != a);
}

TEST_CASE("splits, scale constant and tensor consistency") {
  const auto d = generate_dataset(small(Family::CirclesHighContrast, 9));
  REQUIRE(d.samples.size() == 7);
  CHECK(d.header.family == Family::CirclesHighContrast);
  CHECK(d.header.delta_train == 0.05);

  std::set<std::uint64_t> ids;
  int per_split[3] = {0, 0, 0};
  for (const auto& s : d.samples) {
    ids.insert(s.sample_id);
    ++per_split[static_cast<int>(split_of(s.sample_id))];
    CHECK(s.seed == sample_seed(9, s.sample_id));
    CHECK(s.grid().valid());
    CHECK(s.eps.maxCoeff() >= 3.5);
  }
  CHECK(ids.size() == 7);
  CHECK(per_split[0] == 3);
  CHECK(per_split[1] == 2);
  CHECK(per_split[2] == 2);

  double train_max = 0.0;
  for (const auto& s : d.samples) {
    if (split_of(s.sample_id) == Split::Train) {
      for (const auto& ch : s.tensor) train_max = std::max(train_max, ch.maxCoeff());
    }
  }
  CHECK(d.header.scale_c == train_max);
  CHECK(train_max * (2.0 / d.header.scale_c) == 2.0);

  const SamplingKernel kernel(d.header.config(), 16);
  for (const auto& s : d.samples) {
    for (std::size_t p = 0; p < s.noisy.size(); ++p) {
      CHECK((kernel.index(s.noisy[p]) - s.tensor[p]).cwiseAbs().maxCoeff() <= 1e-12);
      const auto noisy = add_noise(make_record(s.clean[p], static_cast<int>(p)), 0.05,
                                   noise_seed(s.sample_id, 0.05, static_cast<int>(p)));
      CHECK(noisy.us == s.noisy[p]);
    }
  }
}

TEST_CASE("stored clean fields are the forward solution of the stored grid") {
  const auto d = generate_dataset(small(Family::Circles, 3));
  const auto cfg = d.header.config();
  const auto& s = d.samples[1];
  for (int p = 0; p < cfg.n_inc; ++p) {
    const auto us = scattered_at_receivers(solve_forward(s.grid(), cfg, p), s.grid(), cfg).us;
    CHECK((us - s.clean[p]).norm() <= 1e-12 * us.norm());
  }
}

TEST_CASE("re-noising and tensor recomputation") {
  auto d = generate_dataset(small(Family::Circles, 11));
  const auto original = encode_container(d);
  recompute_tensors(d, 1);
  CHECK(encode_container(d) == original);
  renoise(d, 0.05, 2);
  CHECK(encode_container(d) == original);
  renoise(d, 0.4, 1);
  CHECK(d.samples[0].noisy[0] != d.samples[0].clean[0]);
  const double rel = (d.samples[0].noisy[0] - d.samples[0].clean[0]).norm() / d.samples[0].clean[0].norm();
  CHECK(rel > 0.1);
  CHECK(rel < 1.0);

  Dataset bare = d;
  bare.header.flags = flags::kTensor;
  CHECK_THROWS_AS(renoise(bare, 0.1), DomainError);
  CHECK_THROWS_AS(recompute_tensors(bare), DomainError);
}

TEST_CASE("circle count is uniform on {1, 2, 3}") {
  int counts[3] = {0, 0, 0};
  const int total = 3000;
  for (int i = 0; i < total; ++i) {
    Rng rng(sample_seed(42, make_sample_id(Split::Train, i)));
    const auto circles = sample_circles(Family::Circles, rng);
    REQUIRE(circles.size() >= 1);
    REQUIRE(circles.size() <= 3);
    ++counts[circles.size() - 1];
    for (const auto& c : circles) {
      CHECK(std::abs(c.center.x()) <= 0.6);
      CHECK(c.radius >= 0.15);
      CHECK(c.radius < 0.4);
      CHECK(c.permittivity >= 1.5);
      CHECK(c.permittivity < 2.0);
    }
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - total / 3.0) * (c - total / 3.0) / (total / 3.0);
  const double p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(2), chi2));
  MESSAGE("counts " << counts[0] << " " << counts[1] << " " << counts[2] << ", p = " << p_value);
  CHECK(p_value > 0.01);
}

TEST_CASE("digit family") {
  std::vector<DigitImage> digits(2, DigitImage::Zero(28, 28));
  digits[0].block(6, 12, 16, 4).setOnes();
  digits[1].block(8, 6, 4, 16).setOnes();
  auto p = small(Family::Digits, 4);
  CHECK_THROWS_AS(generate_dataset(p), DomainError);
  p.digits = digits;
  const auto d = generate_dataset(p);
  for (const auto& s : d.samples) {
    CHECK(s.grid().valid());
    CHECK(s.eps.maxCoeff() > 1.0);
    CHECK(s.eps.maxCoeff() < 2.5);
  }
}

TEST_CASE("custom scenes land in the test split") {
  auto p = small(Family::Custom, 1);
  p.n = 64;
  p.custom_scenes = {make_four_circles(), make_austria(AustriaVariant::Mnist2)};
  p.cfg.n_inc = 1;
  const auto d = generate_dataset(p);
  REQUIRE(d.samples.size() == 2);
  CHECK(d.samples[0].eps == p.custom_scenes[0].eps);
  CHECK(split_of(d.samples[1].sample_id) == Split::Test);
  CHECK(d.header.scale_c == 0.0);
}
