#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "scatter/augmentation.hpp"
#include "scatter/container.hpp"

using namespace scatter;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "scatter_cli_test";

int run(const std::string& args) {
  const std::string cmd = std::string(SCATTER_CLI) + " " + args + " > " + (kDir / "log.txt").string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return status == 0 ? 0 : 1;
}

std::string path(const std::string& name) { return (kDir / name).string(); }

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  Fixture() { fs::create_directories(kDir); }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "gen is deterministic and thread-count independent") {
  const std::string common = "gen --family circles --n-train 3 --n-val 1 --n-test 1 --ni 2 --nr 16 --grid 24 --seed 42";
  REQUIRE(run(common + " --threads 1 --out " + path("a.scat")) == 0);
  REQUIRE(run(common + " --threads 3 --out " + path("b.scat")) == 0);
  CHECK(slurp(path("a.scat")) == slurp(path("b.scat")));
  const auto d = read_container(path("a.scat"));
  CHECK(d.samples.size() == 5);
  CHECK(d.header.n_inc == 2);
  CHECK(d.header.n_rec == 16);
  CHECK(d.header.n == 24);
  CHECK(d.header.delta_train == 0.05);
}

TEST_CASE_FIXTURE(Fixture, "JSON config and half aperture") {
  {
    std::ofstream cfg(path("cfg.json"));
    cfg << R"({"n_inc": 4, "n_rec": 20, "r_meas": 4.0, "wavelength": 0.5})";
  }
  REQUIRE(run("gen --family circles --n-train 1 --grid 16 --config " + path("cfg.json") + " --out " + path("c.scat")) == 0);
  const auto d = read_container(path("c.scat"));
  CHECK(d.header.n_inc == 4);
  CHECK(d.header.n_rec == 20);
  CHECK(d.header.r_meas == 4.0);
  CHECK(d.header.k == doctest::Approx(4.0 * 3.141592653589793));

  REQUIRE(run("gen --family circles --n-train 1 --grid 16 --aperture half --out " + path("h.scat")) == 0);
  const auto h = read_container(path("h.scat"));
  CHECK(h.header.n_rec == 16);
  CHECK(h.header.aperture_end == doctest::Approx(3.141592653589793));
}

TEST_CASE_FIXTURE(Fixture, "dsm on a zero-contrast sample gives zero channels") {
  Dataset d;
  ExperimentConfig cfg;
  cfg.n_inc = 2;
  d.header = ContainerHeader::from_config(cfg, 16, Family::Custom);
  d.header.flags = flags::kClean;
  StoredSample s;
  s.eps = RasterXd::Ones(16, 16);
  s.clean.assign(2, Eigen::VectorXcd::Zero(32));
  d.samples.push_back(s);
  write_container(d, path("zero.scat"));
  REQUIRE(run("dsm --in " + path("zero.scat") + " --out " + path("zero_t.scat")) == 0);
  const auto out = read_container(path("zero_t.scat"));
  REQUIRE((out.header.flags & flags::kTensor) != 0);
  for (const auto& ch : out.samples[0].tensor) CHECK(ch.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE_FIXTURE(Fixture, "dsm re-noising reproduces the generated tensors") {
  REQUIRE(run("gen --family circles --n-train 2 --n-test 1 --ni 2 --grid 16 --seed 3 --out " + path("g.scat")) == 0);
  REQUIRE(run("dsm --in " + path("g.scat") + " --delta 0.05 --out " + path("g2.scat")) == 0);
  CHECK(slurp(path("g.scat")) == slurp(path("g2.scat")));
  REQUIRE(run("dsm --in " + path("g.scat") + " --delta 0.4 --out " + path("g3.scat")) == 0);
  const auto a = read_container(path("g.scat")), b = read_container(path("g3.scat"));
  CHECK(b.header.scale_c == a.header.scale_c);
  CHECK(a.samples[0].tensor[0] != b.samples[0].tensor[0]);
  CHECK(a.samples[0].clean[1] == b.samples[0].clean[1]);

  REQUIRE(run("solve --in " + path("g.scat") + " --delta 0.05 --out " + path("g4.scat")) == 0);
  CHECK(slurp(path("g.scat")) == slurp(path("g4.scat")));
}

TEST_CASE_FIXTURE(Fixture, "augment applies the exact symmetries") {
  REQUIRE(run("gen --family circles --n-train 2 --ni 4 --grid 16 --seed 8 --out " + path("r.scat")) == 0);
  REQUIRE(run("augment --in " + path("r.scat") + " --op rotate-pi --out " + path("r_pi.scat")) == 0);
  const auto a = read_container(path("r.scat")), b = read_container(path("r_pi.scat"));
  CHECK(b.header.flags == flags::kTensor);
  CHECK(b.samples[1].eps == rotate_pi_grid(a.samples[1].eps));
  CHECK(b.samples[1].tensor[0] == rotate_pi_grid(a.samples[1].tensor[2]));
  REQUIRE(run("augment --in " + path("r.scat") + " --op rotate --j 1 --out " + path("r_q.scat")) == 0);
  CHECK(read_container(path("r_q.scat")).samples[0].eps == rotate_quarter_turns(a.samples[0].eps, 1));
  CHECK(run("augment --in " + path("r.scat") + " --op mirror --out " + path("r_m.scat")) != 0);

  REQUIRE(run("gen --family circles --n-train 1 --ni 1 --grid 16 --seed 8 --out " + path("m.scat")) == 0);
  REQUIRE(run("augment --in " + path("m.scat") + " --op mirror --out " + path("m2.scat")) == 0);
  CHECK(read_container(path("m2.scat")).samples[0].eps == mirror_d1_grid(read_container(path("m.scat")).samples[0].eps));
}

TEST_CASE_FIXTURE(Fixture, "eval writes one JSON line per reconstruction") {
  REQUIRE(run("gen --family circles --n-test 5 --ni 2 --grid 16 --seed 1 --out " + path("truth.scat")) == 0);
  auto recon = read_container(path("truth.scat"));
  recon.header.n_inc = 1;
  recon.header.flags = flags::kTensor;
  for (auto& s : recon.samples) {
    s.clean.clear();
    s.noisy.clear();
    s.tensor = {s.eps * 1.02};
  }
  write_container(recon, path("recon.scat"));
  REQUIRE(run("eval --recon " + path("recon.scat") + " --truth " + path("truth.scat") +
              " --delta 0.15 --report " + path("out.jsonl")) == 0);
  std::ifstream in(path("out.jsonl"));
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("sample_id").get<std::uint64_t>() == recon.samples[lines].sample_id);
    CHECK(j.at("delta").get<double>() == 0.15);
    CHECK(j.at("n_inc").get<int>() == 2);
    CHECK(j.at("rel_l2").get<double>() == doctest::Approx(0.02).epsilon(1e-9));
    CHECK(j.at("ssim").get<double>() > 0.9);
    CHECK(j.at("L").get<double>() == 1.5);
    ++lines;
  }
  CHECK(lines == 5);

  // The truth container itself has two channels per sample, so it is not a
  // valid reconstruction.
  CHECK(run("eval --recon " + path("truth.scat") + " --truth " + path("truth.scat") + " --report " + path("x.jsonl")) != 0);
}

TEST_CASE_FIXTURE(Fixture, "image export and error exits") {
  REQUIRE(run("gen --family custom --scene letters --ni 1 --out " + path("letters.scat")) == 0);
  REQUIRE(run("image --in " + path("letters.scat") + " --sample 1 --out " + path("s.pgm")) == 0);
  const auto pgm = slurp(path("s.pgm"));
  CHECK(pgm.rfind("P5\n64 64\n255\n", 0) == 0);
  CHECK(pgm.size() == 13 + 64 * 64);
  REQUIRE(run("image --in " + path("letters.scat") + " --what tensor --channel 0 --out " + path("t.pgm")) == 0);
  CHECK(run("image --in " + path("letters.scat") + " --what tensor --channel 3 --out " + path("t.pgm")) != 0);

  CHECK(run("gen --family squares --out " + path("x.scat")) != 0);
  CHECK(run("gen --family digits --n-train 1 --out " + path("x.scat")) != 0);
  CHECK(run("gen --family custom --scene moon --out " + path("x.scat")) != 0);
  CHECK(run("gen --family circles --n-train 1 --r-meas 1.0 --out " + path("x.scat")) != 0);
  CHECK(run("dsm --in " + path("missing.scat") + " --out " + path("x.scat")) != 0);
  {
    std::ofstream junk(path("junk.scat"), std::ios::binary);
    junk << "SCATjunkjunkjunk";
  }
  CHECK(run("dsm --in " + path("junk.scat") + " --out " + path("x.scat")) != 0);
  CHECK(run("") != 0);
}
