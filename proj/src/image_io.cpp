#include "jif/image_io.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace jif {

namespace {

using Rgb = std::array<std::uint8_t, 3>;

constexpr std::array<Rgb, 8> kBandPalette{{
    {{66, 30, 15}},
    {{25, 7, 26}},
    {{9, 1, 47}},
    {{12, 44, 138}},
    {{57, 125, 209}},
    {{211, 236, 248}},
    {{248, 201, 95}},
    {{204, 128, 0}},
}};

Rgb pixel_color(std::uint32_t count, std::uint32_t max_iter, ColorScheme scheme) {
  if (count >= max_iter) return {0, 0, 0};
  if (scheme == ColorScheme::Banded) return kBandPalette[count % kBandPalette.size()];
  const auto v = static_cast<std::uint8_t>(255ull * count / max_iter);
  return {v, v, v};
}

}  // namespace

RgbRaster colorize(const EscapeField& field, ColorScheme scheme) {
  RgbRaster raster{field.width_px, field.height_px, {}};
  raster.bytes.reserve(field.counts.size() * 3);
  const auto max_iter = static_cast<std::uint32_t>(field.max_iter);
  for (std::uint32_t count : field.counts) {
    const Rgb rgb = pixel_color(count, max_iter, scheme);
    raster.bytes.insert(raster.bytes.end(), rgb.begin(), rgb.end());
  }
  return raster;
}

std::string write_ppm(const RgbRaster& raster) {
  if (raster.width_px <= 0 || raster.height_px <= 0) {
    throw std::invalid_argument("write_ppm: raster dimensions must be positive");
  }
  const auto w = static_cast<std::uint64_t>(raster.width_px);
  const auto h = static_cast<std::uint64_t>(raster.height_px);
  if (w > std::numeric_limits<std::uint64_t>::max() / 3 / h) {
    throw std::overflow_error("write_ppm: raster size overflows");
  }
  if (raster.bytes.size() != 3 * w * h) {
    throw std::invalid_argument("write_ppm: byte length does not match 3 * width * height");
  }
  std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.append(reinterpret_cast<const char*>(raster.bytes.data()), raster.bytes.size());
  return out;
}

PpmHeader parse_ppm_header(std::string_view bytes) {
  PpmHeader header;
  std::size_t pos = 0;
  auto next_token = [&]() -> std::string_view {
    while (pos < bytes.size() && (bytes[pos] == ' ' || bytes[pos] == '\n')) ++pos;
    const std::size_t start = pos;
    while (pos < bytes.size() && bytes[pos] != ' ' && bytes[pos] != '\n') ++pos;
    if (start == pos) throw std::runtime_error("truncated PPM header");
    return bytes.substr(start, pos - start);
  };
  auto to_int = [](std::string_view s) {
    int v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::runtime_error("bad number in PPM header");
      v = v * 10 + (ch - '0');
    }
    return v;
  };
  if (next_token() != "P6") throw std::runtime_error("not a binary PPM");
  header.width_px = to_int(next_token());
  header.height_px = to_int(next_token());
  header.maxval = to_int(next_token());
  if (pos >= bytes.size() || bytes[pos] != '\n') throw std::runtime_error("truncated PPM header");
  header.data_offset = pos + 1;
  return header;
}

std::string write_orbit_csv(const OrbitTrace& trace, int decimals) {
  std::string out = "k,re,im,abs,abs_re\n";
  for (const auto& r : trace.records) {
    out += std::to_string(r.k);
    for (double v : {r.z.re, r.z.im, r.abs, r.abs_re}) {
      out += ',';
      out += format_fixed(v, decimals);
    }
    out += '\n';
  }
  out += "# outcome: " + describe_outcome(trace) + "\n";
  if (trace.params.is_reduced_regime()) {
    out += "# regime: beta = 0 (Mann reduction, outside the two-stage scheme)\n";
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    os.flush();
    if (!os) {
      os.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
  }
}

}  // namespace jif
