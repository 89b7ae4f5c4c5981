#pragma once

// Seeded generators and independent oracles shared by the unit tests.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "fdpi/int_poly.hpp"

namespace fdpi::test {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntPoly random_poly(Rng& rng, int degree, long bound) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = uniform(rng, -bound, bound);
  if (sgn(c.back()) == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

inline IntPoly random_monic(Rng& rng, int degree, long bound) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = uniform(rng, -bound, bound);
  c.back() = 1;
  return IntPoly(std::move(c));
}

inline long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline long eval_mod(const IntPoly& f, long x, long p) {
  long acc = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = mod(acc * x + mpz_class(f.coeffs()[i] % p).get_si(), p);
  return acc;
}

// Exhaustive root search over F_p.
inline std::vector<long> brute_roots(const IntPoly& f, long p) {
  std::vector<long> out;
  for (long x = 0; x < p; ++x)
    if (eval_mod(f, x, p) == 0) out.push_back(x);
  return out;
}

// Multiplicity of the root x of f mod p by repeated synthetic division.
inline int root_multiplicity(const IntPoly& f, long x, long p) {
  std::vector<long> c;
  for (const auto& a : f.coeffs()) c.push_back(mod(mpz_class(a % p).get_si(), p));
  int k = 0;
  while (c.size() > 1) {
    std::vector<long> q(c.size() - 1);
    long carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = mod(carry * x + c[i], p);
      q[i - 1] = carry;
    }
    if (mod(carry * x + c[0], p) != 0) break;
    ++k;
    c = q;
  }
  return k;
}

// Durand-Kerner iteration for the complex roots of a nonconstant polynomial.
inline std::vector<std::complex<long double>> complex_roots(const IntPoly& f) {
  using C = std::complex<long double>;
  const int n = f.degree();
  std::vector<C> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = C(f.coeffs()[i].get_d(), 0) / C(f.lead().get_d(), 0);
  auto eval = [&](C z) {
    C acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + a[i];
    return acc;
  };
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  for (int iter = 0; iter < 5000; ++iter) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const C step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

inline std::complex<long double> eval_complex(const IntPoly& f, std::complex<long double> z) {
  std::complex<long double> acc = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * z + std::complex<long double>(f.coeffs()[i].get_d());
  return acc;
}

using Matrix = std::vector<std::vector<mpz_class>>;

inline Matrix companion(const IntPoly& f) {
  const auto n = static_cast<std::size_t>(f.degree());
  Matrix c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 1; i < n; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < n; ++i) c[i][n - 1] = -f.coeffs()[i];
  return c;
}

// Characteristic polynomial by Faddeev-LeVerrier; exact over Z for integer matrices.
inline IntPoly charpoly(const Matrix& a) {
  const std::size_t n = a.size();
  auto mul = [n](const Matrix& x, const Matrix& y) {
    Matrix z(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(x[i][k]) != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    const Matrix am = mul(a, m);
    mpz_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    mpz_class q = -tr;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), k);
    c[n - k] = q;
    m = am;
  }
  return IntPoly(std::move(c));
}

// Char poly of A (x) I + I (x) B, whose eigenvalues are all sums alpha_i + beta_j.
inline IntPoly kronecker_sum_charpoly(const IntPoly& f, const IntPoly& g) {
  const Matrix a = companion(f), b = companion(g);
  const std::size_t n = a.size(), m = b.size();
  Matrix k(n * m, std::vector<mpz_class>(n * m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          mpz_class v = 0;
          if (j == j2) v += a[i][i2];
          if (i == i2) v += b[j][j2];
          k[i * m + j][i2 * m + j2] = v;
        }
  return charpoly(k);
}

// Determinant by Gaussian elimination over Q.
inline mpz_class rational_determinant(const std::vector<mpz_class>& entries, std::size_t n) {
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = entries[i * n + j];
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class factor = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= factor * a[c][j];
    }
  }
  det.canonicalize();
  return det.get_num();
}

// Degrees of the irreducible factors of a squarefree f mod a small prime p,
// by trial division with every monic polynomial of each degree.
inline std::vector<int> brute_factor_degrees(const IntPoly& f, long p) {
  std::vector<long> c;
  for (const auto& a : f.coeffs()) c.push_back(mod(mpz_class(a % p).get_si(), p));
  while (!c.empty() && c.back() == 0) c.pop_back();
  auto inv = [p](long a) {
    long r = 1;
    for (long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  auto divide = [&](const std::vector<long>& num, const std::vector<long>& den, std::vector<long>& q) {
    std::vector<long> r = num;
    const int ds = static_cast<int>(den.size()) - 1;
    q.assign(num.size() - den.size() + 1, 0);
    const long li = inv(den.back());
    for (int k = static_cast<int>(r.size()) - 1; k >= ds; --k) {
      const long t = r[k] * li % p;
      q[k - ds] = t;
      for (int j = 0; j <= ds; ++j) r[k - ds + j] = mod(r[k - ds + j] - t * den[j], p);
    }
    for (long x : r)
      if (x) return false;
    return true;
  };
  std::vector<int> out;
  for (int d = 1; static_cast<int>(c.size()) - 1 >= d;) {
    if (static_cast<int>(c.size()) - 1 < 2 * d) {
      out.push_back(static_cast<int>(c.size()) - 1);
      break;
    }
    bool found = false;
    std::vector<long> cand(d + 1, 0);
    cand[d] = 1;
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count && !found; ++idx) {
      long v = idx;
      for (int i = 0; i < d; ++i, v /= p) cand[i] = v % p;
      std::vector<long> q;
      if (divide(c, cand, q)) {
        out.push_back(d);
        c = q;
        found = true;
      }
    }
    if (!found) ++d;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fdpi::test
