#include "jif/complex.hpp"

#include <stdexcept>
#include <string>

namespace jif {

namespace {

// w * a + (1 - w) * b, with the end points returned as-is so the Mann and
// Picard reductions hold bit-for-bit even when the other operand is not finite.
ComplexValue convex_mix(double w, ComplexValue a, ComplexValue b) {
  if (w == 1.0) return a;
  if (w == 0.0) return b;
  return w * a + (1.0 - w) * b;
}

}  // namespace

void IterationParams::validate() const {
  if (n < 2) {
    throw std::invalid_argument("degree n must be >= 2, got " + std::to_string(n));
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta must lie in [0, 1], got " + std::to_string(beta));
  }
  if (!is_finite(c)) {
    throw std::invalid_argument("c must be finite");
  }
}

ComplexValue complex_pow_int(ComplexValue z, int n) {
  if (n < 1) {
    throw std::invalid_argument("complex_pow_int: exponent must be >= 1");
  }
  ComplexValue r = z;
  for (int i = 1; i < n; ++i) {
    r = r * z;
  }
  return r;
}

ComplexValue t_apply(ComplexValue z, const IterationParams& p) {
  return complex_pow_int(z, p.n) + p.c;
}

ComplexValue ji_step(ComplexValue x, const IterationParams& p) {
  const ComplexValue sx = s_apply(x);
  const ComplexValue y = convex_mix(p.beta, t_apply(x, p), sx);
  return convex_mix(p.alpha, t_apply(y, p), sx);
}

}  // namespace jif
