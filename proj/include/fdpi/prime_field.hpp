#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "fdpi/error.hpp"
#include "fdpi/primes.hpp"

namespace fdpi {

// Residue arithmetic for F_p. Both fields expose the same surface so the
// polynomial kernels in mod_poly.hpp can be instantiated for either one:
// WordField for p < 2^63 (the factor-base hot path), BigField for anything.

class WordField {
 public:
  using value_type = std::uint64_t;

  explicit WordField(const Prime& p) : p_(p.word()) {}

  std::uint64_t modulus() const noexcept { return p_; }
  mpz_class modulus_mpz() const { return mpz_class(static_cast<unsigned long>(p_)); }
  Prime prime() const { return Prime::trusted(p_); }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1 % p_; }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type from(const mpz_class& a) const {
    return static_cast<value_type>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p_)));
  }
  value_type from(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  value_type from_u64(std::uint64_t a) const noexcept { return a % p_; }
  mpz_class to_mpz(value_type a) const { return mpz_class(static_cast<unsigned long>(a)); }

  value_type add(value_type a, value_type b) const noexcept {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) fail(ErrorKind::invalid_argument, "inverse of zero in F_p");
    std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(a);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    return from(s0);
  }

  friend bool operator==(const WordField& a, const WordField& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

class BigField {
 public:
  using value_type = mpz_class;

  explicit BigField(const Prime& p) : p_(p.value()) {}

  const mpz_class& modulus() const noexcept { return p_; }
  const mpz_class& modulus_mpz() const noexcept { return p_; }
  Prime prime() const { return Prime::trusted(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return p_ == 1 ? mpz_class(0) : mpz_class(1); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }

  value_type from(const mpz_class& a) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
    return r;
  }
  value_type from(std::int64_t a) const { return from(mpz_class(static_cast<long>(a))); }
  value_type from_u64(std::uint64_t a) const {
    return from(mpz_class(static_cast<unsigned long>(a)));
  }
  const mpz_class& to_mpz(const value_type& a) const { return a; }

  value_type add(const value_type& a, const value_type& b) const {
    mpz_class s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    mpz_class s = a - b;
    if (sgn(s) < 0) s += p_;
    return s;
  }
  value_type neg(const value_type& a) const { return sgn(a) == 0 ? mpz_class(0) : mpz_class(p_ - a); }
  value_type mul(const value_type& a, const value_type& b) const { return from(a * b); }
  value_type inv(const value_type& a) const {
    mpz_class r;
    if (sgn(a) == 0 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
      fail(ErrorKind::invalid_argument, "inverse of zero in F_p");
    return r;
  }

  friend bool operator==(const BigField& a, const BigField& b) { return a.p_ == b.p_; }

 private:
  mpz_class p_;
};

}  // namespace fdpi
