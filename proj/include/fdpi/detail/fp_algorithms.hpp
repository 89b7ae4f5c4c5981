#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fdpi/mod_poly.hpp"

namespace fdpi::detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based stream: the k-th draw depends only on (seed, k).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}
  std::uint64_t next() noexcept { return splitmix64(seed_ ^ splitmix64(counter_++)); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

inline std::uint64_t low_word(std::uint64_t v) noexcept { return v; }
inline std::uint64_t low_word(const mpz_class& v) noexcept {
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

inline WordField::value_type random_element(const WordField& F, CounterRng& rng) {
  return F.from_u64(rng.next());
}

inline BigField::value_type random_element(const BigField& F, CounterRng& rng) {
  const std::size_t words = mpz_sizeinbase(F.modulus().get_mpz_t(), 2) / 64 + 2;
  mpz_class acc = 0;
  for (std::size_t i = 0; i < words; ++i) {
    acc <<= 64;
    acc += mpz_class(static_cast<unsigned long>(rng.next()));
  }
  return F.from(acc);
}

/// Seed derived from the modulus and coefficients, so the default splitting
/// sequence is a pure function of the input polynomial.
template <class Field>
std::uint64_t derived_seed(const FpPoly<Field>& f) {
  std::uint64_t h = splitmix64(low_word(f.field().modulus()));
  for (const auto& c : f.coeffs()) h = splitmix64(h ^ low_word(c));
  return h;
}

template <class Field>
bool is_squarefree(const FpPoly<Field>& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

template <class Field>
void split_linear_factors(const FpPoly<Field>& s, const mpz_class& half, CounterRng& rng,
                          std::vector<typename Field::value_type>& out) {
  const auto& F = s.field();
  if (s.degree() <= 0) return;
  if (s.degree() == 1) {
    out.push_back(F.neg(F.mul(s[0], F.inv(s.lead()))));
    return;
  }
  const FpPoly<Field> one(F, {F.one()});
  for (;;) {
    FpPoly<Field> shift(F, {random_element(F, rng), F.one()});
    FpPoly<Field> h = gcd(powmod(shift, half, s) - one, s);
    if (h.degree() > 0 && h.degree() < s.degree()) {
      split_linear_factors(h, half, rng, out);
      split_linear_factors(s / h, half, rng, out);
      return;
    }
  }
}

/// Distinct roots of f in F_p, ascending. Small moduli are scanned exhaustively;
/// otherwise gcd(x^p - x, f) isolates the split part, which is then separated
/// by gcds with (x + a)^((p-1)/2) - 1.
template <class Field>
std::vector<typename Field::value_type> find_roots(const FpPoly<Field>& f, std::uint64_t seed) {
  using V = typename Field::value_type;
  if (f.is_zero()) fail(ErrorKind::invalid_argument, "roots of the zero polynomial");
  const auto& F = f.field();
  const mpz_class p = F.modulus_mpz();
  std::vector<V> out;
  if (f.degree() == 0) return out;

  if (p < 64) {
    const unsigned long n = p.get_ui();
    for (unsigned long r = 0; r < n; ++r) {
      V v = F.from_u64(r);
      if (F.is_zero(f.eval(v))) out.push_back(v);
    }
    return out;
  }

  const FpPoly<Field> g = f.monic();
  const FpPoly<Field> x = FpPoly<Field>::x(F);
  const FpPoly<Field> s = gcd(powmod_x(p, g) - x, g);
  if (s.degree() == 0) return out;
  CounterRng rng(seed);
  const mpz_class half = (p - 1) / 2;
  split_linear_factors(s, half, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

template <class Field>
std::vector<typename Field::value_type> find_roots(const FpPoly<Field>& f) {
  return find_roots(f, derived_seed(f));
}

/// Degrees of the irreducible factors of a squarefree f (distinct-degree factorization).
template <class Field>
std::vector<int> distinct_degree_profile(const FpPoly<Field>& input) {
  const auto& F = input.field();
  const mpz_class p = F.modulus_mpz();
  FpPoly<Field> f = input.monic();
  const FpPoly<Field> x = FpPoly<Field>::x(F);
  std::vector<int> degrees;
  if (f.degree() < 1) return degrees;
  FpPoly<Field> h = x % f;
  for (int k = 1; f.degree() >= 2 * k; ++k) {
    h = powmod(h, p, f);
    FpPoly<Field> g = gcd(h - x, f);
    if (g.degree() > 0) {
      degrees.insert(degrees.end(), static_cast<std::size_t>(g.degree() / k), k);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) degrees.push_back(f.degree());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

/// Rabin-style irreducibility test for a squarefree f; stops at the first
/// factor found.
template <class Field>
bool is_irreducible_squarefree(const FpPoly<Field>& input) {
  const auto& F = input.field();
  const mpz_class p = F.modulus_mpz();
  const FpPoly<Field> f = input.monic();
  if (f.degree() < 1) return false;
  const FpPoly<Field> x = FpPoly<Field>::x(F);
  FpPoly<Field> h = x % f;
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    h = powmod(h, p, f);
    if (gcd(h - x, f).degree() > 0) return false;
  }
  return true;
}

}  // namespace fdpi::detail
