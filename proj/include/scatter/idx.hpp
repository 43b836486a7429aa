#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "scatter/scene.hpp"

namespace scatter {

// Unsigned-byte rank-3 IDX tensor (magic 0x00000803, big-endian dims):
// images with bytes mapped to [0, 1] by /255. Throws FormatError with the
// failing offset on bad magic or truncation.
std::vector<DigitImage> parse_idx(std::span<const std::byte> bytes);
std::vector<DigitImage> load_idx(const std::filesystem::path& path);

}  // namespace scatter
