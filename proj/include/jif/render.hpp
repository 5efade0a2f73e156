#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jif/complex.hpp"

namespace jif {

inline constexpr std::int64_t kDefaultPixelCap = 16'000'000;

struct Viewport {
  double re_min = -2.0;
  double re_max = 2.0;
  double im_min = -2.0;
  double im_max = 2.0;
  int width_px = 800;
  int height_px = 800;

  /// Throws std::invalid_argument on an empty/inverted window, non-positive
  /// dimensions or more than pixel_cap pixels.
  void validate(std::int64_t pixel_cap = kDefaultPixelCap) const;
};

enum class RenderMode { Mandelbrot, Julia };

struct RenderSpec {
  RenderMode mode = RenderMode::Mandelbrot;
  int n = 2;
  double alpha = 0.5;
  double beta = 0.5;
  /// Seed z0 in Mandelbrot mode, parameter c in Julia mode.
  ComplexValue fixed_point_param{};
  Viewport viewport{};
  int max_iter = 100;
  std::optional<double> escape_radius;

  void validate(std::int64_t pixel_cap = kDefaultPixelCap) const;
};

/// Escape counts, row-major with row 0 at the top of the window.
/// A count equal to max_iter marks an interior (never escaped) pixel.
struct EscapeField {
  int width_px = 0;
  int height_px = 0;
  int max_iter = 0;
  std::vector<std::uint32_t> counts;

  std::uint32_t at(int i, int j) const {
    return counts[static_cast<std::size_t>(j) * static_cast<std::size_t>(width_px) +
                  static_cast<std::size_t>(i)];
  }
  bool interior(int i, int j) const { return at(i, j) == static_cast<std::uint32_t>(max_iter); }

  friend bool operator==(const EscapeField&, const EscapeField&) = default;
};

/// max(|c|, (2/alpha)^(1/(n-1)), (2/beta)^(1/(n-1))), the beta term dropped
/// when beta = 0. Beyond this radius both averaging stages grow |z|.
double default_escape_radius(const IterationParams& p);

/// Center of pixel (i, j). Computed as midpoint + half-width * offset so that
/// mirrored pixels of a symmetric window map to exactly negated coordinates.
/// Throws std::out_of_range for indices outside the viewport.
ComplexValue pixel_to_point(const Viewport& v, int i, int j);

/// Smallest k < max_iter with |z_k| > radius (a non-finite iterate counts as
/// outside), or max_iter when the orbit stays bounded for the whole budget.
int escape_iterations(ComplexValue z0, const IterationParams& p, int max_iter, double radius);

/// Renders the field with `workers` threads (0 = hardware concurrency).
/// The result does not depend on the worker count.
EscapeField render(const RenderSpec& spec, unsigned workers = 0);

enum class Symmetry { Identity, ConjugationAxis, PointReflection };

/// Throws std::invalid_argument when the window is not mapped onto itself by
/// the symmetry (im_min == -im_max, plus re_min == -re_max for point reflection).
void require_symmetric_viewport(const Viewport& viewport, Symmetry symmetry);

/// Fraction of pixels whose interior/exterior class differs from that of
/// their image under the symmetry. Throws std::invalid_argument when the
/// viewport is not symmetric under it.
double symmetry_mismatch(const EscapeField& field, const Viewport& viewport, Symmetry symmetry);

}  // namespace jif
