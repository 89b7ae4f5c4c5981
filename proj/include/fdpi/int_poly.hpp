#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace fdpi {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  mpz_class operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  const mpz_class& lead() const { return coeffs_.back(); }

  mpz_class eval(const mpz_class& x) const;
  IntPoly derivative() const;

  IntPoly& operator+=(const IntPoly& b);
  IntPoly& operator-=(const IntPoly& b);
  IntPoly& operator*=(const mpz_class& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) { return a *= -1; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Shared text format: whitespace-separated decimal coefficients, ascending.
  static IntPoly parse(std::string_view text);
  std::string to_text() const;
  /// Human-readable form, e.g. "x^2 - 3".
  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Remainder of a modulo a monic polynomial, computed exactly over Z.
IntPoly rem_monic(const IntPoly& a, const IntPoly& monic);

/// g(y - x) as a polynomial in x, for an integer y.
IntPoly shifted_reflection(const IntPoly& g, const mpz_class& y);

/// Reads one polynomial per non-blank line; '#' lines are comments.
std::vector<IntPoly> parse_poly_list(std::string_view text);
std::vector<IntPoly> read_poly_file(const std::string& path);

}  // namespace fdpi
