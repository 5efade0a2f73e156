#include "jif/orbit.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace jif {

namespace {

OrbitRecord make_record(int k, ComplexValue z) {
  OrbitRecord r{k, z, abs(z), std::fabs(z.re)};
  if (!is_finite(z)) r.abs = std::numeric_limits<double>::infinity();
  return r;
}

// Upper estimate of |z_k - limit| for a linearly contracting orbit. Steps
// far below the tolerance (or at rounding level) are accepted as they are, so
// an orbit sitting on a repelling fixed point still counts as converged.
double error_bound(double d_k, double d_prev, ComplexValue z_k, double conv_tol) {
  const double noise = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, abs(z_k));
  if (d_k <= std::max(noise, 1e-3 * conv_tol)) return d_k;
  if (!(d_prev > 0.0)) return std::numeric_limits<double>::infinity();
  const double q = d_k / d_prev;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return d_k / (1.0 - q);
}

}  // namespace

OrbitTrace trace_orbit(ComplexValue z0, const IterationParams& p, int max_iter, double conv_tol,
                       double escape_radius) {
  p.validate();
  if (max_iter < 1) throw std::invalid_argument("trace_orbit: max_iter must be >= 1");
  if (!(conv_tol > 0.0)) throw std::invalid_argument("trace_orbit: conv_tol must be positive");
  if (!(escape_radius > 0.0) || !std::isfinite(escape_radius)) {
    throw std::invalid_argument("trace_orbit: escape radius must be positive and finite");
  }
  if (!is_finite(z0)) throw std::invalid_argument("trace_orbit: seed must be finite");

  OrbitTrace trace{p, z0, {}, Exhausted{}};
  trace.records.reserve(static_cast<std::size_t>(std::min(max_iter, 4096)) + 1);
  trace.records.push_back(make_record(0, z0));
  if (escapes(z0, escape_radius)) {
    trace.outcome = Escaped{0};
    return trace;
  }

  ComplexValue z = z0;
  double d_prev = 0.0;
  int run = 0;
  for (int k = 1; k <= max_iter; ++k) {
    const ComplexValue next = ji_step(z, p);
    trace.records.push_back(make_record(k, next));
    if (escapes(next, escape_radius)) {
      trace.outcome = Escaped{k};
      return trace;
    }
    const double d = abs(next - z);
    run = error_bound(d, d_prev, next, conv_tol) < conv_tol ? run + 1 : 0;
    if (run == 3) {
      trace.outcome = Converged{k - 2, next};
      return trace;
    }
    d_prev = d;
    z = next;
  }
  return trace;
}

std::string format_fixed(double v, int decimals) {
  if (decimals < 0) throw std::invalid_argument("format_fixed: negative decimal count");
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";

  // Exact-enough expansion: 40 guard digits sit far below the gap between any
  // double and a decimal tie, so digit decimals+1 decides the rounding.
  std::array<char, 512> buf{};
  const int guard = 40;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(v),
                                 std::chars_format::fixed, decimals + guard);
  if (ec != std::errc{}) throw std::runtime_error("format_fixed: value too large");
  std::string digits(buf.data(), end);

  std::string kept = digits.substr(0, digits.size() - guard - (decimals == 0 ? 1 : 0));
  const char decider = digits[digits.size() - guard];
  if (decider >= '5') {
    int i = static_cast<int>(kept.size()) - 1;
    for (; i >= 0; --i) {
      if (kept[i] == '.') continue;
      if (kept[i] == '9') {
        kept[i] = '0';
      } else {
        ++kept[i];
        break;
      }
    }
    if (i < 0) kept.insert(kept.begin(), '1');
  }
  const bool zero = kept.find_first_not_of("0.") == std::string::npos;
  return (v < 0 && !zero) ? "-" + kept : kept;
}

std::vector<TableRow> paper_table(const OrbitTrace& trace, int decimals) {
  std::vector<TableRow> rows;
  rows.reserve(trace.records.size());
  for (const auto& r : trace.records) {
    rows.push_back({r.k + 1, format_fixed(r.abs_re, decimals)});
  }
  return rows;
}

std::optional<int> convergence_index(const OrbitTrace& trace, int decimals) {
  const auto* conv = std::get_if<Converged>(&trace.outcome);
  if (conv == nullptr || trace.records.empty()) return std::nullopt;
  const int places = std::max(decimals, kStabilizationDecimals);
  const std::string target = format_fixed(std::fabs(conv->limit.re), places);
  int row = static_cast<int>(trace.records.size());
  for (auto it = trace.records.rbegin(); it != trace.records.rend(); ++it) {
    if (format_fixed(it->abs_re, places) != target) break;
    row = it->k + 1;
  }
  return row;
}

std::string describe_outcome(const OrbitTrace& trace) {
  std::ostringstream os;
  os.precision(17);
  if (const auto* c = std::get_if<Converged>(&trace.outcome)) {
    os << "converged at k=" << c->at_k << " limit=" << c->limit.re << (c->limit.im < 0 ? "" : "+")
       << c->limit.im << "i";
  } else if (const auto* e = std::get_if<Escaped>(&trace.outcome)) {
    os << "escaped at k=" << e->at_k;
  } else {
    os << "exhausted after " << trace.records.size() - 1 << " steps";
  }
  return os.str();
}

}  // namespace jif
