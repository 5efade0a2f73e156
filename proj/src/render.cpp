#include "jif/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace jif {

namespace {

double coefficient_radius(int n, double alpha, double beta) {
  const double e = 1.0 / static_cast<double>(n - 1);
  double r = std::pow(2.0 / alpha, e);
  if (beta > 0.0) r = std::max(r, std::pow(2.0 / beta, e));
  return r;
}

double offset(int index, int count) {
  return static_cast<double>(2 * index + 1 - count) / static_cast<double>(count);
}

}  // namespace

void Viewport::validate(std::int64_t pixel_cap) const {
  if (!(std::isfinite(re_min) && std::isfinite(re_max) && std::isfinite(im_min) &&
        std::isfinite(im_max))) {
    throw std::invalid_argument("viewport bounds must be finite");
  }
  if (!(re_min < re_max) || !(im_min < im_max)) {
    throw std::invalid_argument("viewport needs re_min < re_max and im_min < im_max");
  }
  if (width_px <= 0 || height_px <= 0) {
    throw std::invalid_argument("viewport dimensions must be positive");
  }
  if (static_cast<std::int64_t>(width_px) * height_px > pixel_cap) {
    throw std::invalid_argument("viewport exceeds the pixel cap of " + std::to_string(pixel_cap));
  }
}

void RenderSpec::validate(std::int64_t pixel_cap) const {
  IterationParams{n, alpha, beta, fixed_point_param}.validate();
  viewport.validate(pixel_cap);
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (escape_radius && !(*escape_radius > 0.0 && std::isfinite(*escape_radius))) {
    throw std::invalid_argument("escape radius must be positive and finite");
  }
}

double default_escape_radius(const IterationParams& p) {
  return std::max(abs(p.c), coefficient_radius(p.n, p.alpha, p.beta));
}

ComplexValue pixel_to_point(const Viewport& v, int i, int j) {
  if (i < 0 || i >= v.width_px || j < 0 || j >= v.height_px) {
    throw std::out_of_range("pixel (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside viewport");
  }
  const double re_mid = 0.5 * (v.re_min + v.re_max);
  const double im_mid = 0.5 * (v.im_min + v.im_max);
  const double re_half = 0.5 * (v.re_max - v.re_min);
  const double im_half = 0.5 * (v.im_max - v.im_min);
  return {re_mid + re_half * offset(i, v.width_px), im_mid - im_half * offset(j, v.height_px)};
}

int escape_iterations(ComplexValue z0, const IterationParams& p, int max_iter, double radius) {
  ComplexValue z = z0;
  for (int k = 0; k < max_iter; ++k) {
    if (escapes(z, radius)) return k;
    z = ji_step(z, p);
  }
  return max_iter;
}

EscapeField render(const RenderSpec& spec, unsigned workers) {
  spec.validate();
  const Viewport& v = spec.viewport;
  EscapeField field{v.width_px, v.height_px, spec.max_iter,
                    std::vector<std::uint32_t>(static_cast<std::size_t>(v.width_px) *
                                               static_cast<std::size_t>(v.height_px))};

  const double base_radius = coefficient_radius(spec.n, spec.alpha, spec.beta);
  auto render_row = [&](int j) {
    std::uint32_t* out = field.counts.data() + static_cast<std::size_t>(j) * v.width_px;
    for (int i = 0; i < v.width_px; ++i) {
      const ComplexValue point = pixel_to_point(v, i, j);
      IterationParams p{spec.n, spec.alpha, spec.beta, spec.fixed_point_param};
      ComplexValue seed = point;
      if (spec.mode == RenderMode::Mandelbrot) {
        p.c = point;
        seed = spec.fixed_point_param;
      }
      const double radius = spec.escape_radius.value_or(std::max(abs(p.c), base_radius));
      out[i] = static_cast<std::uint32_t>(escape_iterations(seed, p, spec.max_iter, radius));
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(v.height_px));

  // Rows are handed out dynamically; each row is written by exactly one worker.
  std::atomic<int> next_row{0};
  auto worker = [&] {
    for (int j = next_row++; j < v.height_px; j = next_row++) render_row(j);
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  return field;
}

void require_symmetric_viewport(const Viewport& viewport, Symmetry symmetry) {
  if (symmetry != Symmetry::Identity && viewport.im_min != -viewport.im_max) {
    throw std::invalid_argument("viewport is not symmetric about the real axis");
  }
  if (symmetry == Symmetry::PointReflection && viewport.re_min != -viewport.re_max) {
    throw std::invalid_argument("viewport is not symmetric about the imaginary axis");
  }
}

double symmetry_mismatch(const EscapeField& field, const Viewport& viewport, Symmetry symmetry) {
  if (field.width_px != viewport.width_px || field.height_px != viewport.height_px) {
    throw std::invalid_argument("field and viewport dimensions differ");
  }
  require_symmetric_viewport(viewport, symmetry);
  const bool flip_rows = symmetry != Symmetry::Identity;
  const bool flip_cols = symmetry == Symmetry::PointReflection;

  const int w = field.width_px;
  const int h = field.height_px;
  std::int64_t differing = 0;
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      const int mi = flip_cols ? w - 1 - i : i;
      const int mj = flip_rows ? h - 1 - j : j;
      if (field.interior(i, j) != field.interior(mi, mj)) ++differing;
    }
  }
  return static_cast<double>(differing) / (static_cast<double>(w) * h);
}

}  // namespace jif
