#include "scatter/dataset.hpp"

#include <algorithm>
#include <numbers>

#include "scatter/error.hpp"
#include "scatter/forward.hpp"
#include "scatter/parallel.hpp"

namespace scatter {

std::vector<CircleSpec> sample_circles(Family family, Rng& rng) {
  double eps_lo = 1.5, eps_hi = 2.0;
  if (family == Family::CirclesHighContrast) {
    eps_lo = 3.5;
    eps_hi = 4.0;
  } else if (family != Family::Circles) {
    throw DomainError("sample_circles: not a circle family");
  }
  const int count = rng.uniform_int(1, 3);
  std::vector<CircleSpec> circles;
  for (int c = 0; c < count; ++c) {
    CircleSpec spec;
    spec.center.x() = rng.uniform(-0.6, 0.6);
    spec.center.y() = rng.uniform(-0.6, 0.6);
    spec.radius = rng.uniform(0.15, 0.4);
    spec.permittivity = rng.uniform(eps_lo, eps_hi);
    circles.push_back(spec);
  }
  return circles;
}

ContrastGrid sample_digit_scene(const std::vector<DigitImage>& digits, Rng& rng, int n) {
  if (digits.empty()) throw DomainError("digit family needs at least one image");
  const auto& image = digits[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<int>(digits.size()) - 1))];
  const double rotation = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double eps_digit = rng.uniform(1.5, 2.5);
  CircleSpec circle;
  circle.center.x() = rng.uniform(-0.6, 0.6);
  circle.center.y() = rng.uniform(-0.6, 0.6);
  circle.radius = rng.uniform(0.1, 0.3);
  circle.permittivity = rng.uniform(1.5, 2.5);
  return digit_to_grid(image, rotation, circle, eps_digit, n);
}

ContrastGrid sample_scene(Family family, Rng& rng, const std::vector<DigitImage>& digits, int n) {
  switch (family) {
    case Family::Circles:
    case Family::CirclesHighContrast: return rasterize_circles(sample_circles(family, rng), n);
    case Family::Digits: return sample_digit_scene(digits, rng, n);
    case Family::Custom: break;
  }
  throw DomainError("custom scenes are supplied, not sampled");
}

FieldRecord make_record(const Eigen::VectorXcd& us, int incidence, double noise_level) {
  FieldRecord rec;
  rec.incidence = incidence;
  rec.us = us;
  rec.noise_level = noise_level;
  return rec;
}

namespace {

std::vector<Eigen::VectorXcd> noisy_copy(const std::vector<Eigen::VectorXcd>& clean,
                                         std::uint64_t sample_id, double delta) {
  std::vector<Eigen::VectorXcd> noisy;
  noisy.reserve(clean.size());
  for (std::size_t p = 0; p < clean.size(); ++p) {
    const int inc = static_cast<int>(p);
    noisy.push_back(add_noise(make_record(clean[p], inc), delta, noise_seed(sample_id, delta, inc)).us);
  }
  return noisy;
}

std::vector<RasterXd> tensor_of(const std::vector<Eigen::VectorXcd>& fields,
                                const SamplingKernel& kernel) {
  std::vector<RasterXd> channels;
  channels.reserve(fields.size());
  for (const auto& us : fields) channels.push_back(kernel.index(us));
  return channels;
}

}  // namespace

StoredSample simulate_sample(const ContrastGrid& grid, const ExperimentConfig& cfg,
                             std::uint64_t sample_id, std::uint64_t seed, double delta,
                             const SamplingKernel& kernel) {
  StoredSample s;
  s.sample_id = sample_id;
  s.seed = seed;
  s.eps = grid.eps;
  const MomentSystem system(grid, cfg);
  const auto records = scattered_at_receivers(system.solve_all(), grid, cfg);
  for (const auto& rec : records) s.clean.push_back(rec.us);
  s.noisy = noisy_copy(s.clean, sample_id, delta);
  s.tensor = tensor_of(s.noisy, kernel);
  return s;
}

double training_scale(const Dataset& data) {
  double c = 0.0;
  for (const auto& s : data.samples) {
    if (split_of(s.sample_id) != Split::Train) continue;
    for (const auto& ch : s.tensor) c = std::max(c, ch.maxCoeff());
  }
  return c;
}

Dataset generate_dataset(const GenParams& params) {
  params.cfg.validate();
  if (params.delta < 0.0) throw DomainError("noise level must be non-negative");

  struct Job {
    std::uint64_t sample_id;
    std::uint64_t seed;
    const ContrastGrid* scene;  // custom scenes only
  };
  std::vector<Job> jobs;
  auto add_split = [&](Split split, int count) {
    for (int i = 0; i < count; ++i) {
      const auto id = make_sample_id(split, static_cast<std::uint64_t>(i));
      jobs.push_back({id, sample_seed(params.master_seed, id), nullptr});
    }
  };
  if (params.family == Family::Custom) {
    for (std::size_t i = 0; i < params.custom_scenes.size(); ++i) {
      const auto id = make_sample_id(Split::Test, i);
      jobs.push_back({id, sample_seed(params.master_seed, id), &params.custom_scenes[i]});
    }
  } else {
    add_split(Split::Train, params.n_train);
    add_split(Split::Val, params.n_val);
    add_split(Split::Test, params.n_test);
  }

  Dataset data;
  data.header = ContainerHeader::from_config(params.cfg, params.n, params.family);
  data.header.delta_train = params.delta;
  data.header.flags = flags::kClean | flags::kNoisy | flags::kTensor;
  data.samples.resize(jobs.size());

  const SamplingKernel kernel(params.cfg, params.n);
  parallel_for(jobs.size(), resolve_threads(params.threads), [&](std::size_t i) {
    const Job& job = jobs[i];
    ContrastGrid grid;
    if (job.scene) {
      grid = *job.scene;
    } else {
      Rng rng(job.seed);
      grid = sample_scene(params.family, rng, params.digits, params.n);
    }
    data.samples[i] = simulate_sample(grid, params.cfg, job.sample_id, job.seed, params.delta, kernel);
  });
  data.header.scale_c = training_scale(data);
  return data;
}

void renoise(Dataset& data, double delta, std::optional<int> threads) {
  if (!(data.header.flags & flags::kClean)) {
    throw DomainError("re-noising needs stored clean fields");
  }
  const SamplingKernel kernel(data.header.config(), static_cast<int>(data.header.n));
  parallel_for(data.samples.size(), resolve_threads(threads), [&](std::size_t i) {
    auto& s = data.samples[i];
    s.noisy = noisy_copy(s.clean, s.sample_id, delta);
    s.tensor = tensor_of(s.noisy, kernel);
  });
  data.header.flags |= flags::kNoisy | flags::kTensor;
}

void recompute_tensors(Dataset& data, std::optional<int> threads) {
  const bool noisy = data.header.flags & flags::kNoisy;
  if (!noisy && !(data.header.flags & flags::kClean)) {
    throw DomainError("container holds no fields to compute index tensors from");
  }
  const SamplingKernel kernel(data.header.config(), static_cast<int>(data.header.n));
  parallel_for(data.samples.size(), resolve_threads(threads), [&](std::size_t i) {
    auto& s = data.samples[i];
    s.tensor = tensor_of(noisy ? s.noisy : s.clean, kernel);
  });
  data.header.flags |= flags::kTensor;
}

void simulate_dataset(Dataset& data, double delta, std::optional<int> threads) {
  const ExperimentConfig cfg = data.header.config();
  const SamplingKernel kernel(cfg, static_cast<int>(data.header.n));
  parallel_for(data.samples.size(), resolve_threads(threads), [&](std::size_t i) {
    auto& s = data.samples[i];
    s = simulate_sample(s.grid(), cfg, s.sample_id, s.seed, delta, kernel);
  });
  data.header.delta_train = delta;
  data.header.flags = flags::kClean | flags::kNoisy | flags::kTensor;
}

}  // namespace scatter
