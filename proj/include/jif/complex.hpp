#pragma once

#include <cmath>
#include <limits>

namespace jif {

/// A point of the complex plane.
///
/// Arithmetic is spelled out component-wise instead of going through
/// std::complex so that every operation commutes exactly with conjugation
/// and negation; the symmetry checks in the renderer depend on this.
struct ComplexValue {
  double re = 0.0;
  double im = 0.0;

  friend constexpr bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

constexpr ComplexValue operator+(ComplexValue a, ComplexValue b) { return {a.re + b.re, a.im + b.im}; }
constexpr ComplexValue operator-(ComplexValue a, ComplexValue b) { return {a.re - b.re, a.im - b.im}; }
constexpr ComplexValue operator-(ComplexValue a) { return {-a.re, -a.im}; }
constexpr ComplexValue operator*(ComplexValue a, ComplexValue b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr ComplexValue operator*(double s, ComplexValue a) { return {s * a.re, s * a.im}; }

constexpr ComplexValue conj(ComplexValue z) { return {z.re, -z.im}; }
constexpr double norm_sq(ComplexValue z) { return z.re * z.re + z.im * z.im; }
inline double abs(ComplexValue z) { return std::hypot(z.re, z.im); }
inline bool is_finite(ComplexValue z) { return std::isfinite(z.re) && std::isfinite(z.im); }

// True when z is non-finite or |z| > radius. The squared norm settles most
// points; hypot decides the ones within a few ulps of the circle.
inline bool escapes(ComplexValue z, double radius) {
  if (!is_finite(z)) return true;
  const double n2 = norm_sq(z);
  const double r2 = radius * radius;
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * r2;
  if (n2 > r2 + slack) return true;
  if (n2 < r2 - slack) return false;
  return abs(z) > radius;
}

/// Degree and scheme coefficients of the Jungck-Ishikawa iteration for
/// z^n - z + c, split as T z = z^n + c and S z = z.
///
/// Constant coefficients only. beta = 0 is accepted so that the Mann and
/// Picard reductions can be expressed, but it lies outside the regime the
/// scheme is normally run in (see is_reduced_regime()).
struct IterationParams {
  int n = 2;
  double alpha = 0.5;
  double beta = 0.5;
  ComplexValue c{};

  /// Throws std::invalid_argument unless n >= 2, 0 < alpha <= 1,
  /// 0 <= beta <= 1 and c is finite.
  void validate() const;

  bool is_reduced_regime() const { return beta == 0.0; }
};

/// z multiplied by itself n times. n >= 1.
ComplexValue complex_pow_int(ComplexValue z, int n);

/// T z = z^n + c
ComplexValue t_apply(ComplexValue z, const IterationParams& p);

/// S z = z
constexpr ComplexValue s_apply(ComplexValue z) { return z; }

/// One Jungck-Ishikawa step with S the identity:
///   y  = beta  * T x + (1 - beta)  * x
///   x' = alpha * T y + (1 - alpha) * x
/// A non-finite result means the orbit has numerically escaped.
ComplexValue ji_step(ComplexValue x, const IterationParams& p);

}  // namespace jif
