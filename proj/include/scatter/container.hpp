#pragma once

// SCAT1: little-endian binary container for datasets.
//
//   "SCAT" | u32 version = 1 | u32 family | u32 N_samples | u32 N_i | u32 N_r
//   | u32 n | f64 k | f64 r_meas | f64 aperture_start | f64 aperture_end
//   | f64 delta_train | f64 scale_c | u32 flags
//   per sample: u64 sample_id | u64 seed | n*n f64 eps (row-major)
//               [flags bit0] N_i*N_r*2 f64 clean us (re, im interleaved)
//               [flags bit1] N_i*N_r*2 f64 noisy us
//               [flags bit2] N_i*n*n f64 tensor
//   u64 FNV-1a checksum of every preceding byte
//
// The split (train / val / test) of a sample is carried in the top byte of
// its sample_id.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "scatter/contrast_grid.hpp"
#include "scatter/experiment.hpp"

namespace scatter {

enum class Family : std::uint32_t {
  Circles = 0,
  CirclesHighContrast = 1,
  Digits = 2,
  Custom = 3,
};

std::string to_string(Family f);
Family family_from_string(const std::string& name);

enum class Split : std::uint8_t { Train = 0, Val = 1, Test = 2 };

constexpr std::uint64_t make_sample_id(Split split, std::uint64_t index) {
  return (static_cast<std::uint64_t>(split) << 56) | (index & ((1ULL << 56) - 1));
}
constexpr Split split_of(std::uint64_t sample_id) {
  return static_cast<Split>(sample_id >> 56);
}
std::string to_string(Split s);

namespace flags {
constexpr std::uint32_t kClean = 1u << 0;
constexpr std::uint32_t kNoisy = 1u << 1;
constexpr std::uint32_t kTensor = 1u << 2;
}  // namespace flags

struct ContainerHeader {
  std::uint32_t version = 1;
  Family family = Family::Custom;
  std::uint32_t n_inc = 1;
  std::uint32_t n_rec = 32;
  std::uint32_t n = 64;
  double k = 0.0;
  double r_meas = 3.0;
  double aperture_start = 0.0;
  double aperture_end = 0.0;
  double delta_train = 0.0;
  double scale_c = 0.0;
  std::uint32_t flags = 0;

  ExperimentConfig config() const;
  static ContainerHeader from_config(const ExperimentConfig& cfg, int n, Family family);
};

struct StoredSample {
  std::uint64_t sample_id = 0;
  std::uint64_t seed = 0;
  RasterXd eps;
  std::vector<Eigen::VectorXcd> clean;  // per incidence
  std::vector<Eigen::VectorXcd> noisy;
  std::vector<RasterXd> tensor;         // per channel, unscaled

  ContrastGrid grid() const;
};

struct Dataset {
  ContainerHeader header;
  std::vector<StoredSample> samples;
};

std::uint64_t fnv1a64(std::span<const std::byte> bytes);

std::vector<std::byte> encode_container(const Dataset& data);
// Throws FormatError on bad magic/version, truncation, shape mismatch or a
// checksum failure.
Dataset decode_container(std::span<const std::byte> bytes);

void write_container(const Dataset& data, const std::filesystem::path& path);
Dataset read_container(const std::filesystem::path& path);

}  // namespace scatter
