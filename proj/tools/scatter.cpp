// Command-line driver: dataset generation, forward solves, index tensors,
// augmentation, evaluation and image export over SCAT1 containers.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scatter/augmentation.hpp"
#include "scatter/container.hpp"
#include "scatter/dataset.hpp"
#include "scatter/error.hpp"
#include "scatter/idx.hpp"
#include "scatter/metrics.hpp"
#include "scatter/pgm.hpp"
#include "scatter/scene.hpp"

namespace {

using namespace scatter;
using json = nlohmann::json;

struct ConfigFlags {
  std::string config_path;
  int n_inc = 1;
  int n_rec = 32;
  double r_meas = 3.0;
  double wavelength = 0.75;
  std::string aperture = "full";
  CLI::Option* n_rec_opt = nullptr;
  CLI::Option* n_inc_opt = nullptr;
  CLI::Option* r_meas_opt = nullptr;
  CLI::Option* wavelength_opt = nullptr;
  CLI::Option* aperture_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON file with ExperimentConfig fields");
    n_inc_opt = cmd->add_option("--ni", n_inc, "number of incidences")->check(CLI::PositiveNumber);
    n_rec_opt = cmd->add_option("--nr", n_rec, "number of receivers")->check(CLI::PositiveNumber);
    r_meas_opt = cmd->add_option("--r-meas", r_meas, "measurement radius");
    wavelength_opt = cmd->add_option("--wavelength", wavelength, "wavelength (k = 2 pi / lambda)");
    aperture_opt = cmd->add_option("--aperture", aperture, "full or half")
                       ->check(CLI::IsMember({"full", "half"}));
  }

  // JSON file first, explicit flags override it.
  ExperimentConfig build() const {
    ExperimentConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw FormatError("cannot open config " + config_path);
      const json j = json::parse(in);
      if (j.contains("wavelength")) cfg.k = 2.0 * std::numbers::pi / j["wavelength"].get<double>();
      cfg.k = j.value("k", cfg.k);
      cfg.n_inc = j.value("n_inc", cfg.n_inc);
      cfg.n_rec = j.value("n_rec", cfg.n_rec);
      cfg.r_meas = j.value("r_meas", cfg.r_meas);
      cfg.aperture_start = j.value("aperture_start", cfg.aperture_start);
      cfg.aperture_end = j.value("aperture_end", cfg.aperture_end);
    }
    if (*aperture_opt && aperture == "half") {
      const auto half = ExperimentConfig::half_aperture();
      cfg.aperture_start = half.aperture_start;
      cfg.aperture_end = half.aperture_end;
      if (!*n_rec_opt) cfg.n_rec = half.n_rec;
    }
    if (*n_inc_opt) cfg.n_inc = n_inc;
    if (*n_rec_opt) cfg.n_rec = n_rec;
    if (*r_meas_opt) cfg.r_meas = r_meas;
    if (*wavelength_opt) cfg.k = 2.0 * std::numbers::pi / wavelength;
    cfg.validate();
    return cfg;
  }
};

std::vector<ContrastGrid> custom_scenes(const std::vector<std::string>& names) {
  std::vector<ContrastGrid> scenes;
  for (const auto& name : names) {
    if (name == "austria") {
      scenes.push_back(make_austria(AustriaVariant::CircleDataset));
    } else if (name == "austria-mnist-1") {
      scenes.push_back(make_austria(AustriaVariant::Mnist1));
    } else if (name == "austria-mnist-2") {
      scenes.push_back(make_austria(AustriaVariant::Mnist2));
    } else if (name == "four-circles") {
      scenes.push_back(make_four_circles());
    } else if (name == "letters") {
      for (auto& g : make_letters()) scenes.push_back(std::move(g));
    } else {
      throw DomainError("unknown scene '" + name + "'");
    }
  }
  return scenes;
}

std::optional<int> threads_of(int t) { return t > 0 ? std::optional<int>(t) : std::nullopt; }

const StoredSample& find_sample(const Dataset& data, std::optional<std::size_t> index,
                                std::optional<std::uint64_t> id) {
  if (id) {
    for (const auto& s : data.samples) {
      if (s.sample_id == *id) return s;
    }
    throw DomainError("no sample with id " + std::to_string(*id));
  }
  const std::size_t i = index.value_or(0);
  if (i >= data.samples.size()) throw DomainError("sample index out of range");
  return data.samples[i];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse medium scattering toolkit: simulation, direct sampling, datasets"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: SCATTER_DSM_THREADS or all cores)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a dataset container");
  ConfigFlags gen_cfg;
  gen_cfg.attach(gen);
  std::string family = "circles", idx_path, gen_out;
  std::vector<std::string> scenes;
  int n_train = 0, n_val = 0, n_test = 0, grid_n = 64;
  double gen_delta = 0.05;
  std::uint64_t seed = 0;
  gen->add_option("--family", family, "circles | circles-high-contrast | digits | custom")
      ->check(CLI::IsMember({"circles", "circles-high-contrast", "digits", "custom"}));
  gen->add_option("--scene", scenes,
                  "custom scenes: austria, austria-mnist-1, austria-mnist-2, four-circles, letters");
  gen->add_option("--n-train", n_train)->check(CLI::NonNegativeNumber);
  gen->add_option("--n-val", n_val)->check(CLI::NonNegativeNumber);
  gen->add_option("--n-test", n_test)->check(CLI::NonNegativeNumber);
  gen->add_option("--grid", grid_n, "pixels per side")->check(CLI::Range(8, 512));
  gen->add_option("--delta", gen_delta, "relative noise level of stored fields")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "master seed");
  gen->add_option("--idx", idx_path, "IDX image file (digits family)");
  gen->add_option("--out", gen_out)->required();

  // solve
  auto* solve = app.add_subcommand("solve", "forward-solve the grids of a container");
  std::string solve_in, solve_out;
  double solve_delta = 0.0;
  solve->add_option("--in", solve_in)->required()->check(CLI::ExistingFile);
  solve->add_option("--out", solve_out)->required();
  solve->add_option("--delta", solve_delta)->check(CLI::NonNegativeNumber);

  // dsm
  auto* dsm = app.add_subcommand("dsm", "compute index tensors from stored fields");
  std::string dsm_in, dsm_out;
  std::optional<double> dsm_delta;
  dsm->add_option("--in", dsm_in)->required()->check(CLI::ExistingFile);
  dsm->add_option("--out", dsm_out)->required();
  dsm->add_option("--delta", dsm_delta, "re-noise the stored clean fields at this level first")
      ->check(CLI::NonNegativeNumber);

  // augment
  auto* augment = app.add_subcommand("augment", "apply an exact symmetry to every sample");
  std::string aug_in, aug_out, aug_op = "rotate-pi";
  int aug_j = 0;
  augment->add_option("--in", aug_in)->required()->check(CLI::ExistingFile);
  augment->add_option("--out", aug_out)->required();
  augment->add_option("--op", aug_op)->check(CLI::IsMember({"rotate-pi", "mirror", "rotate"}));
  augment->add_option("--j", aug_j, "rotation step for --op rotate (angle 2 pi j / N_i)");

  // eval
  auto* eval = app.add_subcommand("eval", "score reconstructions against ground truth");
  std::string recon_path, truth_path, report_path;
  std::optional<double> eval_delta;
  double dynamic_range = 1.5;
  eval->add_option("--recon", recon_path)->required()->check(CLI::ExistingFile);
  eval->add_option("--truth", truth_path)->required()->check(CLI::ExistingFile);
  eval->add_option("--delta", eval_delta, "noise level to record in the report");
  eval->add_option("--report", report_path, "JSON-lines output")->required();
  eval->add_option("--L", dynamic_range, "SSIM dynamic range")->check(CLI::PositiveNumber);

  // image
  auto* image = app.add_subcommand("image", "export a sample as PGM");
  std::string img_in, img_out, what = "eps";
  std::optional<std::size_t> img_index;
  std::optional<std::uint64_t> img_id;
  int channel = 0;
  std::optional<double> lo, hi;
  image->add_option("--in", img_in)->required()->check(CLI::ExistingFile);
  image->add_option("--out", img_out)->required();
  image->add_option("--sample", img_index, "sample position in the container");
  image->add_option("--sample-id", img_id, "sample id");
  image->add_option("--what", what)->check(CLI::IsMember({"eps", "tensor"}));
  image->add_option("--channel", channel);
  image->add_option("--lo", lo);
  image->add_option("--hi", hi);

  CLI11_PARSE(app, argc, argv);
  const auto nthreads = threads_of(threads);

  try {
    if (*gen) {
      GenParams params;
      params.family = family_from_string(family);
      params.cfg = gen_cfg.build();
      params.n_train = n_train;
      params.n_val = n_val;
      params.n_test = n_test;
      params.n = grid_n;
      params.delta = gen_delta;
      params.master_seed = seed;
      params.threads = nthreads;
      if (params.family == Family::Digits) {
        if (idx_path.empty()) throw DomainError("--idx is required for the digits family");
        params.digits = load_idx(idx_path);
      }
      if (params.family == Family::Custom) {
        if (scenes.empty()) throw DomainError("--scene is required for the custom family");
        params.custom_scenes = custom_scenes(scenes);
      }
      const Dataset data = generate_dataset(params);
      write_container(data, gen_out);
      std::cout << "wrote " << data.samples.size() << " samples to " << gen_out
                << " (scale_c = " << data.header.scale_c << ")\n";
    } else if (*solve) {
      Dataset data = read_container(solve_in);
      simulate_dataset(data, solve_delta, nthreads);
      data.header.scale_c = training_scale(data);
      write_container(data, solve_out);
    } else if (*dsm) {
      Dataset data = read_container(dsm_in);
      if (dsm_delta) {
        renoise(data, *dsm_delta, nthreads);
      } else {
        recompute_tensors(data, nthreads);
      }
      if (data.header.scale_c <= 0.0) data.header.scale_c = training_scale(data);
      write_container(data, dsm_out);
    } else if (*augment) {
      Dataset data = read_container(aug_in);
      if (!(data.header.flags & flags::kTensor)) {
        throw DomainError("augmentation needs index tensors; run dsm first");
      }
      AugmentOp op;
      if (aug_op == "mirror") {
        op.kind = AugmentOp::Kind::MirrorD1;
      } else if (aug_op == "rotate") {
        op.kind = AugmentOp::Kind::RotateStep;
        op.j = aug_j;
      }
      for (auto& s : data.samples) {
        IndexTensor t;
        t.n_inc = static_cast<int>(data.header.n_inc);
        t.n = static_cast<int>(data.header.n);
        t.channels = s.tensor;
        const auto out = apply(op, s.grid(), t);
        s.eps = out.grid.eps;
        s.tensor = out.tensor.channels;
        s.clean.clear();
        s.noisy.clear();
      }
      // Receiver data is not transformed; only grids and tensors are kept.
      data.header.flags = flags::kTensor;
      write_container(data, aug_out);
    } else if (*eval) {
      const Dataset recon = read_container(recon_path);
      const Dataset truth = read_container(truth_path);
      if (!(recon.header.flags & flags::kTensor) || recon.header.n_inc != 1) {
        throw DomainError("reconstruction container must hold one tensor channel per sample");
      }
      std::map<std::uint64_t, const StoredSample*> by_id;
      for (const auto& s : truth.samples) by_id[s.sample_id] = &s;
      SsimOptions opts;
      opts.dynamic_range = dynamic_range;
      const double delta = eval_delta.value_or(recon.header.delta_train);
      std::ofstream report(report_path, std::ios::trunc);
      if (!report) throw FormatError("cannot open " + report_path);
      double sum_l2 = 0.0, sum_ssim = 0.0;
      for (const auto& s : recon.samples) {
        const auto it = by_id.find(s.sample_id);
        if (it == by_id.end()) {
          throw DomainError("reconstruction " + std::to_string(s.sample_id) + " has no ground truth");
        }
        const double e = relative_l2(s.tensor[0], it->second->eps);
        const double q = ssim(s.tensor[0], it->second->eps, opts);
        sum_l2 += e;
        sum_ssim += q;
        report << json{{"sample_id", s.sample_id}, {"delta", delta},
                       {"n_inc", truth.header.n_inc}, {"rel_l2", e},
                       {"ssim", q},           {"L", dynamic_range}}
                      .dump()
               << '\n';
      }
      const auto count = static_cast<double>(recon.samples.size());
      std::cout << "samples " << recon.samples.size();
      if (count > 0) {
        std::cout << "  mean rel_l2 " << sum_l2 / count << "  mean ssim " << sum_ssim / count;
      }
      std::cout << '\n';
    } else if (*image) {
      const Dataset data = read_container(img_in);
      const StoredSample& s = find_sample(data, img_index, img_id);
      if (what == "eps") {
        write_pgm(s.eps, img_out, lo, hi);
      } else {
        if (!(data.header.flags & flags::kTensor)) throw DomainError("container has no tensors");
        if (channel < 0 || channel >= static_cast<int>(s.tensor.size())) {
          throw DomainError("channel out of range");
        }
        write_pgm(s.tensor[static_cast<std::size_t>(channel)], img_out, lo, hi);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
