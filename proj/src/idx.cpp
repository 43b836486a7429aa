#include "scatter/idx.hpp"

#include <fstream>
#include <iterator>
#include <string>

#include "scatter/error.hpp"

namespace scatter {

namespace {

std::uint32_t read_be32(std::span<const std::byte> bytes, std::size_t offset) {
  if (offset + 4 > bytes.size()) {
    throw FormatError("IDX: truncated header at offset " + std::to_string(offset));
  }
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < 4; ++i) v = (v << 8) | static_cast<std::uint32_t>(bytes[offset + i]);
  return v;
}

}  // namespace

std::vector<DigitImage> parse_idx(std::span<const std::byte> bytes) {
  constexpr std::uint32_t kMagic = 0x00000803;
  const std::uint32_t magic = read_be32(bytes, 0);
  if (magic != kMagic) {
    throw FormatError("IDX: bad magic at offset 0 (expected 0x00000803 for ubyte rank-3)");
  }
  const std::uint32_t count = read_be32(bytes, 4);
  const std::uint32_t rows = read_be32(bytes, 8);
  const std::uint32_t cols = read_be32(bytes, 12);
  constexpr std::size_t kHeader = 16;
  const std::uint64_t expected = static_cast<std::uint64_t>(count) * rows * cols;
  const std::uint64_t actual = bytes.size() - kHeader;
  if (actual < expected) {
    throw FormatError("IDX: truncated payload at offset " + std::to_string(bytes.size()) +
                      ": expected " + std::to_string(expected) + " bytes, got " +
                      std::to_string(actual));
  }
  std::vector<DigitImage> images;
  images.reserve(count);
  std::size_t pos = kHeader;
  for (std::uint32_t m = 0; m < count; ++m) {
    DigitImage img(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r) {
      for (std::uint32_t c = 0; c < cols; ++c) {
        img(r, c) = static_cast<double>(std::to_integer<unsigned>(bytes[pos++])) / 255.0;
      }
    }
    images.push_back(std::move(img));
  }
  return images;
}

std::vector<DigitImage> load_idx(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("IDX: cannot open " + path.string());
  const std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_idx(std::as_bytes(std::span(raw)));
}

}  // namespace scatter
