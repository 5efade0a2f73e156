#include "jif/roots.hpp"

#include <algorithm>
#include <string>

namespace jif {

namespace {

ComplexValue reciprocal(ComplexValue z) {
  const double d = norm_sq(z);
  return {z.re / d, -z.im / d};
}

ComplexValue eval_poly(ComplexValue z, int n, ComplexValue c) {
  return complex_pow_int(z, n) - z + c;
}

}  // namespace

double residual(ComplexValue z, int n, ComplexValue c) {
  return abs(eval_poly(z, n, c));
}

RootSet poly_roots(int n, ComplexValue c, double tol, int max_iter) {
  if (n < 2) {
    throw std::invalid_argument("poly_roots: degree must be >= 2");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("poly_roots: tolerance must be positive");
  }
  if (!is_finite(c)) {
    throw std::invalid_argument("poly_roots: c must be finite");
  }

  const ComplexValue seed{0.4, 0.9};
  std::vector<ComplexValue> z(static_cast<std::size_t>(n));
  z[0] = seed;
  for (int k = 1; k < n; ++k) {
    z[k] = z[k - 1] * seed;
  }

  auto max_res = [&] {
    double m = 0.0;
    for (const auto& r : z) m = std::max(m, residual(r, n, c));
    return m;
  };

  // Sweep in place (Gauss-Seidel ordering) until every residual is below tol
  // and the corrections have died out.
  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      ComplexValue denom{1.0, 0.0};
      for (int j = 0; j < n; ++j) {
        if (j != i) denom = denom * (z[i] - z[j]);
      }
      const ComplexValue step = eval_poly(z[i], n, c) * reciprocal(denom);
      z[i] = z[i] - step;
      max_step = std::max(max_step, abs(step));
    }
    if (std::any_of(z.begin(), z.end(), [](ComplexValue v) { return !is_finite(v); })) {
      break;
    }
    if (max_step < tol && max_res() < tol) {
      std::sort(z.begin(), z.end(), [](ComplexValue a, ComplexValue b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
      });
      return RootSet{n, c, std::move(z), max_res()};
    }
  }
  throw RootSolveError("poly_roots: no convergence for degree " + std::to_string(n) +
                       " within " + std::to_string(max_iter) + " sweeps");
}

}  // namespace jif
