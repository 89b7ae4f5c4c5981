#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "fdpi/field_builder.hpp"
#include "fdpi/mod_poly.hpp"
#include "fdpi/primes.hpp"

namespace fdpi {

/// Distinct roots of f mod p in ascending order (multiplicity dropped).
/// The optional seed only changes the root-splitting path, never the result.
std::vector<mpz_class> roots_mod_p(const ModPoly& f, std::optional<std::uint64_t> seed = std::nullopt);
std::vector<std::uint64_t> roots_mod_p(const WordModPoly& f, std::optional<std::uint64_t> seed = std::nullopt);

/// The prime ideal (r, p) of Z[theta]: kernel of theta -> r in F_p, where r
/// is a root of the defining polynomial mod p.
class FirstDegreePrime {
 public:
  /// Throws invalid_argument unless the defining polynomial vanishes at r mod p.
  FirstDegreePrime(NumberFieldSpec field, mpz_class residue, Prime norm);

  const mpz_class& residue() const noexcept { return residue_; }
  const Prime& norm() const noexcept { return norm_; }
  const NumberFieldSpec& field() const noexcept { return field_; }

  friend bool operator==(const FirstDegreePrime& a, const FirstDegreePrime& b) {
    return a.residue_ == b.residue_ && a.norm_ == b.norm_ && a.field_ == b.field_;
  }

 private:
  NumberFieldSpec field_;
  mpz_class residue_;
  Prime norm_;
};

std::vector<FirstDegreePrime> enumerate_fdpi(const NumberFieldSpec& field, const Prime& p);
std::vector<FirstDegreePrime> enumerate_fdpi(const CompositeFieldSpec& field, const Prime& p);

/// (sum r_i mod p, p) on the compositum; parts must line up with the subfields.
FirstDegreePrime combine(std::span<const FirstDegreePrime> parts, const CompositeFieldSpec& composite);

/// Every tuple of subfield roots summing to t mod p. Empty means t is not a
/// combination (which forces t to be a multiple root of the compositum poly).
std::vector<std::vector<mpz_class>> decompose(const FirstDegreePrime& t, const CompositeFieldSpec& composite);

/// R'(t) != 0 mod p, given R(t) == 0 mod p.
bool is_simple_root(const IntPoly& r, const mpz_class& t, const Prime& p);

}  // namespace fdpi
