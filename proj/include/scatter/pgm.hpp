#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "scatter/contrast_grid.hpp"

namespace scatter {

// Binary PGM (P5, maxval 255). Image rows run from the top of the sampling
// region (largest y) down, columns along x. A value v maps to
// round(255 * (v - lo) / (hi - lo)) clamped to [0, 255]; lo/hi default to the
// raster's min/max, and a flat raster maps to 0.
std::string encode_pgm(const RasterXd& raster, std::optional<double> lo = std::nullopt,
                       std::optional<double> hi = std::nullopt);
void write_pgm(const RasterXd& raster, const std::filesystem::path& path,
               std::optional<double> lo = std::nullopt, std::optional<double> hi = std::nullopt);

}  // namespace scatter
