#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "fdpi/int_poly.hpp"

namespace fdpi {

/// Row-major (n+m) x (n+m) Sylvester matrix: m shifted rows of f's
/// coefficients (leading first), then n shifted rows of g's.
struct SylvesterMatrix {
  std::size_t n = 0;  // deg f
  std::size_t m = 0;  // deg g
  std::vector<mpz_class> entries;

  std::size_t dim() const noexcept { return n + m; }
  mpz_class& at(std::size_t row, std::size_t col) { return entries[row * dim() + col]; }
  const mpz_class& at(std::size_t row, std::size_t col) const { return entries[row * dim() + col]; }
};

SylvesterMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g);

/// Fraction-free Gaussian elimination; exact for any square integer matrix.
mpz_class bareiss_determinant(std::vector<mpz_class> entries, std::size_t dim);

/// Res(f, g) = lc(f)^deg g * prod g(alpha_i).
mpz_class sylvester_resultant(const IntPoly& f, const IntPoly& g);

/// Res_x(f(x), g(y - x)) for monic nonconstant f, g: monic of degree
/// deg f * deg g whose roots are all sums alpha_i + beta_j. Built by
/// evaluating at the nodes 0, 1, -1, 2, -2, ... and Newton interpolation.
IntPoly composite_resultant(const IntPoly& f, const IntPoly& g);

/// Interpolation nodes used by composite_resultant: 0, 1, -1, 2, -2, ...
std::vector<mpz_class> interpolation_nodes(std::size_t count);

/// Exact Newton interpolation; throws internal if a divided difference is not integral.
IntPoly newton_interpolate(const std::vector<mpz_class>& nodes, std::vector<mpz_class> values);

/// (-1)^(n(n-1)/2) Res(f, f') for monic f of degree >= 1.
mpz_class discriminant(const IntPoly& f);

}  // namespace fdpi
