#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fdpi/detail/multiply.hpp"
#include "fdpi/error.hpp"
#include "fdpi/int_poly.hpp"
#include "fdpi/prime_field.hpp"

namespace fdpi {

/// Dense polynomial over F_p with coefficients in [0, p), ascending degree.
template <class Field>
class FpPoly {
 public:
  using field_type = Field;
  using value_type = typename Field::value_type;

  explicit FpPoly(Field field) : field_(std::move(field)) {}
  /// Coefficients must already be reduced into [0, p).
  FpPoly(Field field, std::vector<value_type> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static FpPoly monomial(const Field& field, value_type c, std::size_t degree) {
    std::vector<value_type> v(degree + 1, field.zero());
    v[degree] = std::move(c);
    return FpPoly(field, std::move(v));
  }
  static FpPoly x(const Field& field) { return monomial(field, field.one(), 1); }

  const Field& field() const noexcept { return field_; }
  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const value_type& lead() const { return coeffs_.back(); }
  value_type operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

  value_type eval(const value_type& x) const {
    value_type acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  FpPoly derivative() const {
    if (coeffs_.size() <= 1) return FpPoly(field_);
    std::vector<value_type> d(coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      d[i - 1] = field_.mul(coeffs_[i], field_.from_u64(i));
    return FpPoly(field_, std::move(d));
  }

  FpPoly monic() const {
    if (coeffs_.empty()) return *this;
    const value_type inv = field_.inv(coeffs_.back());
    std::vector<value_type> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.mul(coeffs_[i], inv);
    return FpPoly(field_, std::move(v));
  }

  IntPoly lift() const {
    std::vector<mpz_class> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.emplace_back(field_.to_mpz(c));
    return IntPoly(std::move(v));
  }

  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Field field_;
  std::vector<value_type> coeffs_;
};

using ModPoly = FpPoly<BigField>;
using WordModPoly = FpPoly<WordField>;

namespace detail {

template <class Field>
void require_same_ring(const FpPoly<Field>& a, const FpPoly<Field>& b) {
  if (!(a.field() == b.field()))
    fail(ErrorKind::ring_mismatch, "polynomials over different prime fields");
}

}  // namespace detail

template <class Field>
FpPoly<Field> operator+(const FpPoly<Field>& a, const FpPoly<Field>& b) {
  detail::require_same_ring(a, b);
  return FpPoly<Field>(a.field(), detail::add_padded<typename Field::value_type>(a.coeffs(), b.coeffs(), a.field()));
}

template <class Field>
FpPoly<Field> operator-(const FpPoly<Field>& a, const FpPoly<Field>& b) {
  detail::require_same_ring(a, b);
  const auto& F = a.field();
  std::vector<typename Field::value_type> out(std::max(a.coeffs().size(), b.coeffs().size()), F.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] = a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] = F.sub(out[i], b.coeffs()[i]);
  return FpPoly<Field>(F, std::move(out));
}

template <class Field>
FpPoly<Field> operator*(const FpPoly<Field>& a, const FpPoly<Field>& b) {
  detail::require_same_ring(a, b);
  return FpPoly<Field>(a.field(), detail::multiply<typename Field::value_type>(a.coeffs(), b.coeffs(), a.field()));
}

/// Quotient and remainder; the divisor's leading coefficient is inverted once.
template <class Field>
std::pair<FpPoly<Field>, FpPoly<Field>> divrem(const FpPoly<Field>& a, const FpPoly<Field>& b) {
  detail::require_same_ring(a, b);
  if (b.is_zero()) fail(ErrorKind::invalid_argument, "division by the zero polynomial");
  const auto& F = a.field();
  using V = typename Field::value_type;
  if (a.degree() < b.degree()) return {FpPoly<Field>(F), a};
  const int n = b.degree();
  const V inv_lead = F.inv(b.lead());
  std::vector<V> r = a.coeffs();
  std::vector<V> q(r.size() - n, F.zero());
  const auto& bc = b.coeffs();
  for (int k = static_cast<int>(r.size()) - 1; k >= n; --k) {
    if (F.is_zero(r[k])) continue;
    V c = F.mul(r[k], inv_lead);
    q[k - n] = c;
    for (int i = 0; i < n; ++i) r[k - n + i] = F.sub(r[k - n + i], F.mul(c, bc[i]));
    r[k] = F.zero();
  }
  r.resize(n);
  return {FpPoly<Field>(F, std::move(q)), FpPoly<Field>(F, std::move(r))};
}

template <class Field>
FpPoly<Field> operator%(const FpPoly<Field>& a, const FpPoly<Field>& b) {
  return divrem(a, b).second;
}

template <class Field>
FpPoly<Field> operator/(const FpPoly<Field>& a, const FpPoly<Field>& b) {
  return divrem(a, b).first;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class Field>
FpPoly<Field> gcd(FpPoly<Field> a, FpPoly<Field> b) {
  detail::require_same_ring(a, b);
  while (!b.is_zero()) {
    FpPoly<Field> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// base^exponent mod modulus by left-to-right square-and-multiply.
template <class Field>
FpPoly<Field> powmod(const FpPoly<Field>& base, const mpz_class& exponent, const FpPoly<Field>& modulus) {
  detail::require_same_ring(base, modulus);
  if (modulus.degree() < 1) fail(ErrorKind::invalid_argument, "powmod: modulus must be nonconstant");
  if (sgn(exponent) < 0) fail(ErrorKind::invalid_argument, "powmod: negative exponent");
  const auto& F = modulus.field();
  FpPoly<Field> b = base % modulus;
  FpPoly<Field> acc(F, {F.one()});
  acc = acc % modulus;
  for (auto bit = static_cast<long>(mpz_sizeinbase(exponent.get_mpz_t(), 2)); bit-- > 0;) {
    acc = (acc * acc) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = (acc * b) % modulus;
  }
  return acc;
}

/// x^exponent mod f. Typical use is exponent = p, the root-extraction cost center.
template <class Field>
FpPoly<Field> powmod_x(const mpz_class& exponent, const FpPoly<Field>& f) {
  if (f.degree() < 1) fail(ErrorKind::invalid_argument, "powmod_x: f must be nonconstant");
  return powmod(FpPoly<Field>::x(f.field()), exponent, f);
}

template <class Field>
FpPoly<Field> reduce(const IntPoly& a, const Field& field) {
  std::vector<typename Field::value_type> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(field.from(c));
  return FpPoly<Field>(field, std::move(v));
}

/// Reduction into F_p[x]; the degree drops when p divides the leading coefficient.
inline ModPoly reduce_mod(const IntPoly& a, const Prime& p) { return reduce(a, BigField(p)); }

template <class Field>
FpPoly<Field> from_ints(const Field& field, std::initializer_list<long> coeffs) {
  std::vector<typename Field::value_type> v;
  for (long c : coeffs) v.push_back(field.from(static_cast<std::int64_t>(c)));
  return FpPoly<Field>(field, std::move(v));
}

template <class To, class From>
FpPoly<To> convert(const FpPoly<From>& a, const To& field) {
  std::vector<typename To::value_type> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(field.from(a.field().to_mpz(c)));
  return FpPoly<To>(field, std::move(v));
}

}  // namespace fdpi
