#include "jif/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "jif/image_io.hpp"
#include "jif/orbit.hpp"
#include "jif/roots.hpp"

namespace jif::cli {

namespace {

double parse_real(std::string_view text, std::string_view what) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || digits.front() == '+' || digits.front() == '-' || ec != std::errc{} ||
      ptr != digits.data() + digits.size() || !std::isfinite(value)) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return negative ? -value : value;
}

// Imaginary coefficient: a bare sign (or nothing) stands for 1.
double parse_imag_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, "complex number '" + std::string(whole) + "', imaginary part");
}

void apply_threads_env(unsigned& workers) {
  const char* env = std::getenv("JF_THREADS");
  if (env == nullptr || *env == '\0') return;
  const std::string_view text(env);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("JF_THREADS must be a positive integer, got '" + std::string(text) +
                                "'");
  }
  workers = value;
}

void emit(const std::string& contents, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << contents;
  } else {
    write_file_atomic(out_path, contents);
  }
}

struct RenderArgs {
  std::string mode = "mandelbrot";
  int n = 2;
  double alpha = 0.5;
  double beta = 0.5;
  std::string param;
  std::string window = "-2,2,-2,2";
  std::string size = "800x800";
  int max_iter = 100;
  std::optional<double> radius;
  std::string scheme = "gray";
  std::string out;
};

void add_render_options(CLI::App& cmd, RenderArgs& a) {
  cmd.add_option("--mode", a.mode, "mandelbrot or julia")
      ->check(CLI::IsMember({"mandelbrot", "julia"}))
      ->capture_default_str();
  cmd.add_option("--n", a.n, "polynomial degree (>= 2)")->capture_default_str();
  cmd.add_option("--alpha", a.alpha, "outer averaging coefficient in (0, 1]")->capture_default_str();
  cmd.add_option("--beta", a.beta, "inner averaging coefficient in [0, 1]")->capture_default_str();
  cmd.add_option("--param", a.param,
                 "seed z0 (mandelbrot, default 0) or parameter c (julia, required)");
  cmd.add_option("--window", a.window, "re_min,re_max,im_min,im_max")->capture_default_str();
  cmd.add_option("--size", a.size, "WxH in pixels")->capture_default_str();
  cmd.add_option("--max-iter", a.max_iter, "iteration budget per pixel")->capture_default_str();
  cmd.add_option("--radius", a.radius, "escape radius (default derived from n, alpha, beta, c)");
}

RenderSpec build_render_spec(const RenderArgs& a) {
  RenderSpec spec;
  spec.mode = a.mode == "julia" ? RenderMode::Julia : RenderMode::Mandelbrot;
  spec.n = a.n;
  spec.alpha = a.alpha;
  spec.beta = a.beta;
  if (a.param.empty()) {
    if (spec.mode == RenderMode::Julia) {
      throw std::invalid_argument("--param (the parameter c) is required in julia mode");
    }
  } else {
    spec.fixed_point_param = parse_complex(a.param);
  }
  parse_window(a.window, spec.viewport);
  parse_size(a.size, spec.viewport);
  spec.max_iter = a.max_iter;
  spec.escape_radius = a.radius;
  spec.validate();
  return spec;
}

std::string format_shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

ComplexValue parse_complex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty complex number");
  if (text.back() != 'i') return {parse_real(text, "complex number"), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // The real/imaginary split is the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag_coefficient(body, text)};
  return {parse_real(body.substr(0, split), "complex number '" + std::string(text) + "', real part"),
          parse_imag_coefficient(body.substr(split), text)};
}

void parse_window(std::string_view text, Viewport& v) {
  double bounds[4];
  std::size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    const std::size_t comma = text.find(',', start);
    if ((k < 3) == (comma == std::string_view::npos)) {
      throw std::invalid_argument("--window needs exactly four comma-separated values");
    }
    const std::size_t end = k < 3 ? comma : text.size();
    bounds[k] = parse_real(text.substr(start, end - start), "window bound");
    start = end + 1;
  }
  v.re_min = bounds[0];
  v.re_max = bounds[1];
  v.im_min = bounds[2];
  v.im_max = bounds[3];
}

void parse_size(std::string_view text, Viewport& v) {
  const std::size_t x = text.find('x');
  auto dim = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || value <= 0) {
      throw std::invalid_argument("--size must look like WxH with positive integers, got '" +
                                  std::string(text) + "'");
    }
    return value;
  };
  if (x == std::string_view::npos) {
    throw std::invalid_argument("--size must look like WxH, got '" + std::string(text) + "'");
  }
  v.width_px = dim(text.substr(0, x));
  v.height_px = dim(text.substr(x + 1));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jungck-Ishikawa orbits, roots and escape-time renders for z^n - z + c", "jif"};
  app.require_subcommand(1);

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "trace an orbit and print it as CSV");
  std::string z0_text, c_text = "0.1", orbit_out;
  IterationParams orbit_params;
  int orbit_max_iter = kDefaultOrbitMaxIter;
  double conv_tol = kDefaultConvTol;
  std::optional<double> orbit_radius;
  int decimals = 4;
  orbit_cmd->add_option("--z0", z0_text, "seed, e.g. -0.3125+0.79i")->required();
  orbit_cmd->add_option("--n", orbit_params.n, "polynomial degree (>= 2)")->required();
  orbit_cmd->add_option("--alpha", orbit_params.alpha, "in (0, 1]")->required();
  orbit_cmd->add_option("--beta", orbit_params.beta, "in [0, 1]")->required();
  orbit_cmd->add_option("--c", c_text, "complex parameter c")->capture_default_str();
  orbit_cmd->add_option("--max-iter", orbit_max_iter)->capture_default_str();
  orbit_cmd->add_option("--conv-tol", conv_tol)->capture_default_str();
  orbit_cmd->add_option("--radius", orbit_radius, "escape radius (default derived)");
  orbit_cmd->add_option("--decimals", decimals)->capture_default_str();
  orbit_cmd->add_option("--out", orbit_out, "output path (default stdout)");

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "all roots of z^n - z + c as CSV");
  int roots_n = 2;
  std::string roots_c = "0.1", roots_out;
  double roots_tol = 1e-12;
  int roots_max_iter = 500;
  roots_cmd->add_option("--n", roots_n, "polynomial degree (>= 2)")->required();
  roots_cmd->add_option("--c", roots_c, "complex parameter c")->capture_default_str();
  roots_cmd->add_option("--tol", roots_tol)->capture_default_str();
  roots_cmd->add_option("--max-iter", roots_max_iter)->capture_default_str();
  roots_cmd->add_option("--out", roots_out, "output path (default stdout)");

  // render
  auto* render_cmd = app.add_subcommand("render", "escape-time image as binary PPM");
  RenderArgs render_args;
  add_render_options(*render_cmd, render_args);
  render_cmd->add_option("--scheme", render_args.scheme, "gray or banded")
      ->check(CLI::IsMember({"gray", "banded"}))
      ->capture_default_str();
  render_cmd->add_option("--out", render_args.out, "output path (default stdout)");

  // symcheck
  auto* sym_cmd = app.add_subcommand("symcheck", "render and report a symmetry mismatch fraction");
  RenderArgs sym_args;
  std::string symmetry = "conjugation";
  add_render_options(*sym_cmd, sym_args);
  sym_cmd->add_option("--symmetry", symmetry, "conjugation, point or identity")
      ->check(CLI::IsMember({"conjugation", "point", "identity"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "jif: " << e.what() << "\n";
    return kExitUsage;
  }

  // Validation problems surface as invalid_argument/out_of_range before any
  // work is done; everything else is a runtime failure.
  enum class Phase { Validate, Execute } phase = Phase::Validate;
  try {
    unsigned workers = 0;
    apply_threads_env(workers);

    if (orbit_cmd->parsed()) {
      orbit_params.c = parse_complex(c_text);
      const ComplexValue z0 = parse_complex(z0_text);
      orbit_params.validate();
      if (decimals < 0 || decimals > 17) throw std::invalid_argument("--decimals must be in [0, 17]");
      if (orbit_max_iter < 1) throw std::invalid_argument("--max-iter must be >= 1");
      if (!(conv_tol > 0.0)) throw std::invalid_argument("--conv-tol must be positive");
      if (orbit_radius && !(*orbit_radius > 0.0)) throw std::invalid_argument("--radius must be positive");
      const double radius = orbit_radius.value_or(default_escape_radius(orbit_params));
      phase = Phase::Execute;
      const OrbitTrace trace = trace_orbit(z0, orbit_params, orbit_max_iter, conv_tol, radius);
      emit(write_orbit_csv(trace, decimals), orbit_out, out);
    } else if (roots_cmd->parsed()) {
      const ComplexValue c = parse_complex(roots_c);
      if (roots_n < 2) throw std::invalid_argument("--n must be >= 2");
      if (!(roots_tol > 0.0)) throw std::invalid_argument("--tol must be positive");
      if (roots_max_iter < 1) throw std::invalid_argument("--max-iter must be >= 1");
      phase = Phase::Execute;
      const RootSet set = poly_roots(roots_n, c, roots_tol, roots_max_iter);
      std::string csv = "re,im,residual\n";
      for (const auto& r : set.roots) {
        csv += format_shortest(r.re) + "," + format_shortest(r.im) + "," +
               format_shortest(residual(r, set.n, set.c)) + "\n";
      }
      emit(csv, roots_out, out);
    } else if (render_cmd->parsed()) {
      const RenderSpec spec = build_render_spec(render_args);
      const ColorScheme scheme =
          render_args.scheme == "banded" ? ColorScheme::Banded : ColorScheme::Grayscale;
      phase = Phase::Execute;
      emit(write_ppm(colorize(render(spec, workers), scheme)), render_args.out, out);
    } else if (sym_cmd->parsed()) {
      const RenderSpec spec = build_render_spec(sym_args);
      const Symmetry kind = symmetry == "point"         ? Symmetry::PointReflection
                            : symmetry == "conjugation" ? Symmetry::ConjugationAxis
                                                        : Symmetry::Identity;
      require_symmetric_viewport(spec.viewport, kind);
      phase = Phase::Execute;
      const EscapeField field = render(spec, workers);
      out << "mismatch=" << format_shortest(symmetry_mismatch(field, spec.viewport, kind)) << "\n";
    }
  } catch (const std::logic_error& e) {
    err << "jif: " << e.what() << "\n";
    return phase == Phase::Validate ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    err << "jif: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace jif::cli
