#include "scatter/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "scatter/error.hpp"

namespace scatter {

std::string encode_pgm(const RasterXd& raster, std::optional<double> lo, std::optional<double> hi) {
  const auto nx = raster.rows(), ny = raster.cols();
  const double low = lo.value_or(raster.minCoeff());
  const double high = hi.value_or(raster.maxCoeff());
  const double span = high - low;

  std::string out = "P5\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";
  for (Eigen::Index j = ny - 1; j >= 0; --j) {
    for (Eigen::Index i = 0; i < nx; ++i) {
      double v = span > 0.0 ? 255.0 * (raster(i, j) - low) / span : 0.0;
      v = std::clamp(std::round(v), 0.0, 255.0);
      out.push_back(static_cast<char>(static_cast<unsigned char>(v)));
    }
  }
  return out;
}

void write_pgm(const RasterXd& raster, const std::filesystem::path& path, std::optional<double> lo,
               std::optional<double> hi) {
  const std::string bytes = encode_pgm(raster, lo, hi);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace scatter
