#include "fdpi/resultant.hpp"

#include "fdpi/error.hpp"

namespace fdpi {

SylvesterMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) fail(ErrorKind::invalid_argument, "resultant of the zero polynomial");
  SylvesterMatrix s;
  s.n = static_cast<std::size_t>(f.degree());
  s.m = static_cast<std::size_t>(g.degree());
  const std::size_t dim = s.dim();
  s.entries.assign(dim * dim, mpz_class(0));
  for (std::size_t row = 0; row < s.m; ++row)
    for (std::size_t k = 0; k <= s.n; ++k) s.at(row, row + k) = f.coeffs()[s.n - k];
  for (std::size_t row = 0; row < s.n; ++row)
    for (std::size_t k = 0; k <= s.m; ++k) s.at(s.m + row, row + k) = g.coeffs()[s.m - k];
  return s;
}

mpz_class bareiss_determinant(std::vector<mpz_class> a, std::size_t dim) {
  if (dim == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * dim + c]; };
  int sign = 1;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (sgn(at(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < dim && sgn(at(swap_row, k)) == 0) ++swap_row;
      if (swap_row == dim) return 0;
      for (std::size_t c = k; c < dim; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        t = at(i, j) * at(k, k);
        t -= at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  mpz_class det = at(dim - 1, dim - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

mpz_class sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  SylvesterMatrix s = sylvester_matrix(f, g);
  const std::size_t dim = s.dim();
  return bareiss_determinant(std::move(s.entries), dim);
}

std::vector<mpz_class> interpolation_nodes(std::size_t count) {
  std::vector<mpz_class> nodes;
  nodes.reserve(count);
  for (long k = 0; nodes.size() < count; ++k) {
    if (k == 0) {
      nodes.emplace_back(0);
      continue;
    }
    nodes.emplace_back(k);
    if (nodes.size() < count) nodes.emplace_back(-k);
  }
  return nodes;
}

IntPoly newton_interpolate(const std::vector<mpz_class>& nodes, std::vector<mpz_class> c) {
  const std::size_t n = nodes.size();
  if (c.size() != n) fail(ErrorKind::invalid_argument, "node/value count mismatch");
  mpz_class num, den;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      num = c[i] - c[i - 1];
      den = nodes[i] - nodes[i - j];
      if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        fail(ErrorKind::internal, "non-integral divided difference during interpolation");
      mpz_divexact(c[i].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  IntPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * IntPoly(std::vector<mpz_class>{-nodes[i], mpz_class(1)}) + IntPoly::constant(c[i]);
  }
  return acc;
}

IntPoly composite_resultant(const IntPoly& f, const IntPoly& g) {
  if (f.degree() < 1 || g.degree() < 1)
    fail(ErrorKind::invalid_argument, "composite_resultant needs nonconstant polynomials");
  if (!f.is_monic() || !g.is_monic())
    fail(ErrorKind::invalid_argument, "composite_resultant needs monic polynomials");
  const std::size_t degree = static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(g.degree());
  const auto nodes = interpolation_nodes(degree + 1);
  std::vector<mpz_class> values;
  values.reserve(nodes.size());
  for (const auto& y : nodes) values.push_back(sylvester_resultant(f, shifted_reflection(g, y)));
  IntPoly r = newton_interpolate(nodes, std::move(values));
  if (r.degree() != static_cast<int>(degree) || !r.is_monic())
    fail(ErrorKind::internal, "composite resultant is not monic of degree " + std::to_string(degree));
  return r;
}

mpz_class discriminant(const IntPoly& f) {
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "discriminant of a constant");
  if (!f.is_monic()) fail(ErrorKind::invalid_argument, "discriminant expects a monic polynomial");
  const long n = f.degree();
  if (n == 1) return 1;
  mpz_class r = sylvester_resultant(f, f.derivative());
  return ((n * (n - 1) / 2) % 2 == 0) ? r : mpz_class(-r);
}

}  // namespace fdpi
