#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jif/orbit.hpp"
#include "jif/render.hpp"

namespace jif {

/// Row-major 8-bit RGB triples.
struct RgbRaster {
  int width_px = 0;
  int height_px = 0;
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const RgbRaster&, const RgbRaster&) = default;
};

enum class ColorScheme { Grayscale, Banded };

/// Grayscale: v = floor(255 * count / max_iter) in every channel.
/// Banded: palette entry count % 8.
/// Interior pixels (count == max_iter) are black in both schemes.
RgbRaster colorize(const EscapeField& field, ColorScheme scheme);

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by the raw bytes.
std::string write_ppm(const RgbRaster& raster);

struct PpmHeader {
  int width_px = 0;
  int height_px = 0;
  int maxval = 0;
  std::size_t data_offset = 0;
};

/// Parses the header written by write_ppm. Throws std::runtime_error on
/// anything else.
PpmHeader parse_ppm_header(std::string_view bytes);

/// Header "k,re,im,abs,abs_re", one line per record at `decimals` places,
/// then "# outcome: ..." and, for beta = 0, a "# regime: ..." marker.
std::string write_orbit_csv(const OrbitTrace& trace, int decimals);

/// Writes through a temporary sibling and renames it into place, so a failed
/// write never leaves a partial file at `path`. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace jif
