#pragma once

// Seeded randomness. All draws come from std::mt19937_64; uniforms use the
// top 53 bits, normals use the Box-Muller transform (pairs, second value
// cached). Seeds for samples and noise are derived with SplitMix64 so that a
// (master seed, sample id) pair fully determines every draw.

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace scatter {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

// Seed of one dataset sample.
constexpr std::uint64_t sample_seed(std::uint64_t master_seed, std::uint64_t sample_id) {
  return mix_seed(master_seed, sample_id);
}

// Seed of the measurement noise on one incidence of one sample at level
// delta. Shared with the training side, which regenerates test-time noise.
constexpr std::uint64_t kNoiseSalt = 0x5CA77E12D5A1ULL;
inline std::uint64_t noise_seed(std::uint64_t sample_id, double delta, int incidence) {
  std::uint64_t s = mix_seed(kNoiseSalt, sample_id);
  s = mix_seed(s, std::bit_cast<std::uint64_t>(delta));
  return mix_seed(s, static_cast<std::uint64_t>(incidence));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace scatter
