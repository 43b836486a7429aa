#include "scatter/container.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "scatter/error.hpp"

namespace scatter {

static_assert(std::endian::native == std::endian::little,
              "SCAT1 encoding assumes a little-endian host");

std::string to_string(Family f) {
  switch (f) {
    case Family::Circles: return "circles";
    case Family::CirclesHighContrast: return "circles-high-contrast";
    case Family::Digits: return "digits";
    case Family::Custom: return "custom";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "circles") return Family::Circles;
  if (name == "circles-high-contrast") return Family::CirclesHighContrast;
  if (name == "digits") return Family::Digits;
  if (name == "custom") return Family::Custom;
  throw DomainError("unknown dataset family '" + name + "'");
}

std::string to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Val: return "val";
    case Split::Test: return "test";
  }
  return "unknown";
}

ExperimentConfig ContainerHeader::config() const {
  ExperimentConfig cfg;
  cfg.k = k;
  cfg.n_inc = static_cast<int>(n_inc);
  cfg.n_rec = static_cast<int>(n_rec);
  cfg.r_meas = r_meas;
  cfg.aperture_start = aperture_start;
  cfg.aperture_end = aperture_end;
  return cfg;
}

ContainerHeader ContainerHeader::from_config(const ExperimentConfig& cfg, int n, Family family) {
  ContainerHeader h;
  h.family = family;
  h.n_inc = static_cast<std::uint32_t>(cfg.n_inc);
  h.n_rec = static_cast<std::uint32_t>(cfg.n_rec);
  h.n = static_cast<std::uint32_t>(n);
  h.k = cfg.k;
  h.r_meas = cfg.r_meas;
  h.aperture_start = cfg.aperture_start;
  h.aperture_end = cfg.aperture_end;
  return h;
}

ContrastGrid StoredSample::grid() const {
  ContrastGrid g(static_cast<int>(eps.rows()));
  g.eps = eps;
  return g;
}

std::uint64_t fnv1a64(std::span<const std::byte> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const std::byte b : bytes) {
    h ^= static_cast<std::uint64_t>(b);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

constexpr char kMagic[4] = {'S', 'C', 'A', 'T'};

class Writer {
 public:
  template <typename T>
  void put(T value) {
    const auto* p = reinterpret_cast<const std::byte*>(&value);
    buf_.insert(buf_.end(), p, p + sizeof(T));
  }
  void put_doubles(const double* data, std::size_t count) {
    const auto* p = reinterpret_cast<const std::byte*>(data);
    buf_.insert(buf_.end(), p, p + count * sizeof(double));
  }
  std::vector<std::byte>& bytes() { return buf_; }

 private:
  std::vector<std::byte> buf_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::byte> bytes) : bytes_(bytes) {}

  template <typename T>
  T get() {
    T value;
    need(sizeof(T));
    std::memcpy(&value, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }
  void get_doubles(double* out, std::size_t count) {
    need(count * sizeof(double));
    std::memcpy(out, bytes_.data() + pos_, count * sizeof(double));
    pos_ += count * sizeof(double);
  }
  std::size_t position() const { return pos_; }

 private:
  void need(std::size_t count) const {
    if (pos_ + count > bytes_.size()) {
      throw FormatError("SCAT1: truncated at offset " + std::to_string(pos_) + " (need " +
                        std::to_string(count) + " bytes, " +
                        std::to_string(bytes_.size() - pos_) + " left)");
    }
  }
  std::span<const std::byte> bytes_;
  std::size_t pos_ = 0;
};

void put_fields(Writer& w, const std::vector<Eigen::VectorXcd>& fields, const ContainerHeader& h,
                const char* what) {
  if (fields.size() != h.n_inc) {
    throw DomainError(std::string("SCAT1: ") + what + " fields must have one entry per incidence");
  }
  for (const auto& f : fields) {
    if (f.size() != static_cast<Eigen::Index>(h.n_rec)) {
      throw DomainError(std::string("SCAT1: ") + what + " field length differs from N_r");
    }
    w.put_doubles(reinterpret_cast<const double*>(f.data()), 2 * h.n_rec);
  }
}

std::vector<Eigen::VectorXcd> get_fields(Reader& r, const ContainerHeader& h) {
  std::vector<Eigen::VectorXcd> fields(h.n_inc, Eigen::VectorXcd(h.n_rec));
  for (auto& f : fields) r.get_doubles(reinterpret_cast<double*>(f.data()), 2 * h.n_rec);
  return fields;
}

}  // namespace

std::vector<std::byte> encode_container(const Dataset& data) {
  const auto& h = data.header;
  Writer w;
  for (const char c : kMagic) w.put(c);
  w.put<std::uint32_t>(h.version);
  w.put<std::uint32_t>(static_cast<std::uint32_t>(h.family));
  w.put<std::uint32_t>(static_cast<std::uint32_t>(data.samples.size()));
  w.put<std::uint32_t>(h.n_inc);
  w.put<std::uint32_t>(h.n_rec);
  w.put<std::uint32_t>(h.n);
  w.put<double>(h.k);
  w.put<double>(h.r_meas);
  w.put<double>(h.aperture_start);
  w.put<double>(h.aperture_end);
  w.put<double>(h.delta_train);
  w.put<double>(h.scale_c);
  w.put<std::uint32_t>(h.flags);

  const auto n = static_cast<Eigen::Index>(h.n);
  for (const auto& s : data.samples) {
    if (s.eps.rows() != n || s.eps.cols() != n) {
      throw DomainError("SCAT1: sample grid differs from header resolution");
    }
    w.put<std::uint64_t>(s.sample_id);
    w.put<std::uint64_t>(s.seed);
    w.put_doubles(s.eps.data(), static_cast<std::size_t>(n * n));
    if (h.flags & flags::kClean) put_fields(w, s.clean, h, "clean");
    if (h.flags & flags::kNoisy) put_fields(w, s.noisy, h, "noisy");
    if (h.flags & flags::kTensor) {
      if (s.tensor.size() != h.n_inc) {
        throw DomainError("SCAT1: tensor must have one channel per incidence");
      }
      for (const auto& ch : s.tensor) {
        if (ch.rows() != n || ch.cols() != n) {
          throw DomainError("SCAT1: tensor channel differs from header resolution");
        }
        w.put_doubles(ch.data(), static_cast<std::size_t>(n * n));
      }
    }
  }
  const std::uint64_t checksum = fnv1a64(w.bytes());
  w.put<std::uint64_t>(checksum);
  return std::move(w.bytes());
}

Dataset decode_container(std::span<const std::byte> bytes) {
  if (bytes.size() < sizeof(std::uint64_t)) throw FormatError("SCAT1: file too short");
  const auto body = bytes.first(bytes.size() - sizeof(std::uint64_t));

  Reader r(bytes);
  for (const char c : kMagic) {
    if (r.get<char>() != c) throw FormatError("SCAT1: bad magic");
  }
  Dataset data;
  auto& h = data.header;
  h.version = r.get<std::uint32_t>();
  if (h.version != 1) throw FormatError("SCAT1: unsupported version " + std::to_string(h.version));
  h.family = static_cast<Family>(r.get<std::uint32_t>());
  const auto count = r.get<std::uint32_t>();
  h.n_inc = r.get<std::uint32_t>();
  h.n_rec = r.get<std::uint32_t>();
  h.n = r.get<std::uint32_t>();
  h.k = r.get<double>();
  h.r_meas = r.get<double>();
  h.aperture_start = r.get<double>();
  h.aperture_end = r.get<double>();
  h.delta_train = r.get<double>();
  h.scale_c = r.get<double>();
  h.flags = r.get<std::uint32_t>();

  // Size check before allocating anything proportional to the header.
  const std::uint64_t nn = static_cast<std::uint64_t>(h.n) * h.n;
  std::uint64_t per_sample = 16 + 8 * nn;
  if (h.flags & flags::kClean) per_sample += 16ULL * h.n_inc * h.n_rec;
  if (h.flags & flags::kNoisy) per_sample += 16ULL * h.n_inc * h.n_rec;
  if (h.flags & flags::kTensor) per_sample += 8ULL * h.n_inc * nn;
  const std::uint64_t expected = r.position() + per_sample * count + 8;
  if (expected != bytes.size()) {
    throw FormatError("SCAT1: expected " + std::to_string(expected) + " bytes, file has " +
                      std::to_string(bytes.size()));
  }
  const std::uint64_t stored = [&] {
    std::uint64_t v;
    std::memcpy(&v, bytes.data() + body.size(), sizeof v);
    return v;
  }();
  if (stored != fnv1a64(body)) throw FormatError("SCAT1: checksum mismatch");

  const auto n = static_cast<Eigen::Index>(h.n);
  data.samples.resize(count);
  for (auto& s : data.samples) {
    s.sample_id = r.get<std::uint64_t>();
    s.seed = r.get<std::uint64_t>();
    s.eps.resize(n, n);
    r.get_doubles(s.eps.data(), static_cast<std::size_t>(n * n));
    if (h.flags & flags::kClean) s.clean = get_fields(r, h);
    if (h.flags & flags::kNoisy) s.noisy = get_fields(r, h);
    if (h.flags & flags::kTensor) {
      s.tensor.assign(h.n_inc, RasterXd(n, n));
      for (auto& ch : s.tensor) r.get_doubles(ch.data(), static_cast<std::size_t>(n * n));
    }
  }
  return data;
}

void write_container(const Dataset& data, const std::filesystem::path& path) {
  const auto bytes = encode_container(data);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed for " + path.string());
}

Dataset read_container(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  const std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_container(std::as_bytes(std::span(raw)));
}

}  // namespace scatter
