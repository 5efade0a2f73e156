#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jif/complex.hpp"
#include "jif/render.hpp"

namespace jif::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Parses "a", "a+bi", "a-bi", "bi" or "i" (no whitespace, exponents allowed).
/// Throws std::invalid_argument.
ComplexValue parse_complex(std::string_view text);

/// "re_min,re_max,im_min,im_max" into the window fields of `v`.
void parse_window(std::string_view text, Viewport& v);

/// "WxH" into the pixel dimensions of `v`.
void parse_size(std::string_view text, Viewport& v);

/// Entry point shared by the jif executable and the tests. args excludes the
/// program name. Text output goes to `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jif::cli
