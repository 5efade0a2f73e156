#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jif/complex.hpp"

namespace jif {

inline constexpr int kDefaultOrbitMaxIter = 1000;
inline constexpr double kDefaultConvTol = 1e-10;

/// Convergence counts are judged on a display of at least this many decimals.
/// A coarser display can freeze while the orbit is still visibly moving in
/// the next digit, which would report convergence several rows early.
inline constexpr int kStabilizationDecimals = 5;

struct OrbitRecord {
  int k = 0;
  ComplexValue z{};
  double abs = 0.0;     // |z|, +inf for a non-finite iterate
  double abs_re = 0.0;  // |Re z|
};

struct Converged {
  int at_k = 0;
  ComplexValue limit{};
};
struct Escaped {
  int at_k = 0;
};
struct Exhausted {};

using OrbitOutcome = std::variant<Converged, Escaped, Exhausted>;

struct OrbitTrace {
  IterationParams params;
  ComplexValue z0{};
  std::vector<OrbitRecord> records;
  OrbitOutcome outcome = Exhausted{};

  bool converged() const { return std::holds_alternative<Converged>(outcome); }
  bool escaped() const { return std::holds_alternative<Escaped>(outcome); }
};

/// Iterates ji_step from z0 and stops at the first of:
///   - escape: |z_k| > escape_radius or z_k non-finite (Escaped{k});
///   - convergence: the a-posteriori error bound d_k / (1 - q_k), with
///     d_k = |z_k - z_{k-1}| and q_k = d_k / d_{k-1}, stays below conv_tol
///     for three consecutive steps (Converged{first of the three});
///   - max_iter steps (Exhausted).
/// records[0] is z0 and every later record is ji_step of its predecessor.
///
/// Throws std::invalid_argument on bad parameters or a non-finite seed.
OrbitTrace trace_orbit(ComplexValue z0, const IterationParams& p, int max_iter, double conv_tol,
                       double escape_radius);

/// Fixed-point decimal rendering of v, rounded half away from zero on the
/// exact binary value. Zero is never printed with a minus sign.
std::string format_fixed(double v, int decimals);

struct TableRow {
  int row = 0;  // 1-based; row 1 is the seed
  std::string display;
};

/// Rows of |Re z_k| in the fixed-point-table layout: row k shows z_{k-1}.
std::vector<TableRow> paper_table(const OrbitTrace& trace, int decimals);

/// The first 1-based row from which the rounded |Re z| equals the rounded
/// |Re limit| for every remaining row, judged at
/// max(decimals, kStabilizationDecimals) places. nullopt unless converged.
std::optional<int> convergence_index(const OrbitTrace& trace, int decimals);

/// "converged at k=.. limit=..", "escaped at k=..", "exhausted".
std::string describe_outcome(const OrbitTrace& trace);

}  // namespace jif
