#pragma once

#include <stdexcept>
#include <vector>

#include "jif/complex.hpp"

namespace jif {

/// All n roots of z^n - z + c, sorted by (re, im).
struct RootSet {
  int n = 0;
  ComplexValue c{};
  std::vector<ComplexValue> roots;
  double max_residual = 0.0;
};

/// Raised when the simultaneous iteration does not settle within its budget.
class RootSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |z^n - z + c|
double residual(ComplexValue z, int n, ComplexValue c);

/// Durand-Kerner (Weierstrass) iteration for z^n - z + c, seeded at the
/// powers of 0.4 + 0.9i. Every returned root has residual < tol.
///
/// Throws std::invalid_argument for n < 2 or a non-positive tolerance and
/// RootSolveError if max_iter sweeps are not enough.
RootSet poly_roots(int n, ComplexValue c, double tol = 1e-12, int max_iter = 500);

}  // namespace jif
