#pragma once

// End-to-end dataset generation: scene -> moment solve per incidence ->
// measurement noise -> index tensors, stored as SCAT1.

#include <cstdint>
#include <optional>
#include <vector>

#include "scatter/container.hpp"
#include "scatter/dsm.hpp"
#include "scatter/experiment.hpp"
#include "scatter/random.hpp"
#include "scatter/scene.hpp"

namespace scatter {

struct GenParams {
  Family family = Family::Circles;
  int n_train = 0;
  int n_val = 0;
  int n_test = 0;
  ExperimentConfig cfg;
  int n = 64;
  double delta = 0.05;
  std::uint64_t master_seed = 0;
  std::optional<int> threads;
  std::vector<DigitImage> digits;            // Family::Digits
  std::vector<ContrastGrid> custom_scenes;   // Family::Custom, stored as test samples
};

// Circle layouts: 1-3 circles (uniform), centres uniform in [-0.6, 0.6]^2,
// radii U(0.15, 0.4), permittivity U(1.5, 2.0) or U(3.5, 4.0) for the
// high-contrast family.
std::vector<CircleSpec> sample_circles(Family family, Rng& rng);

// Digit scene: random image, rotation U[0, 2 pi), digit and circle
// permittivities U(1.5, 2.5), circle radius U(0.1, 0.3), centre in
// [-0.6, 0.6]^2.
ContrastGrid sample_digit_scene(const std::vector<DigitImage>& digits, Rng& rng, int n = 64);

ContrastGrid sample_scene(Family family, Rng& rng, const std::vector<DigitImage>& digits,
                          int n = 64);

// Clean fields for every incidence, noisy copies at delta (seeded by
// noise_seed(sample_id, delta, p)) and the unscaled index tensor of the
// noisy fields.
StoredSample simulate_sample(const ContrastGrid& grid, const ExperimentConfig& cfg,
                             std::uint64_t sample_id, std::uint64_t seed, double delta,
                             const SamplingKernel& kernel);

Dataset generate_dataset(const GenParams& params);

// Largest index value over all training samples and channels (0 if none).
double training_scale(const Dataset& data);

// Replaces noisy fields by fresh noise at delta drawn on the stored clean
// fields and recomputes tensors from them.
void renoise(Dataset& data, double delta, std::optional<int> threads = std::nullopt);

// Recomputes tensors from the noisy fields (clean when absent).
void recompute_tensors(Dataset& data, std::optional<int> threads = std::nullopt);

// Solves the forward problem for every stored grid, filling clean and noisy
// fields at delta and the tensors.
void simulate_dataset(Dataset& data, double delta, std::optional<int> threads = std::nullopt);

FieldRecord make_record(const Eigen::VectorXcd& us, int incidence, double noise_level = 0.0);

}  // namespace scatter
