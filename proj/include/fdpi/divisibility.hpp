#pragma once

#include <variant>

#include <gmpxx.h>

#include "fdpi/fdpi.hpp"
#include "fdpi/field_builder.hpp"
#include "fdpi/int_poly.hpp"
#include "fdpi/primes.hpp"

namespace fdpi {

/// The principal ideal (e + d*theta) for coprime e, d.
class PrincipalIdealSpec {
 public:
  PrincipalIdealSpec(mpz_class e, mpz_class d);

  const mpz_class& e() const noexcept { return e_; }
  const mpz_class& d() const noexcept { return d_; }

 private:
  mpz_class e_;
  mpz_class d_;
};

/// Generator of I ∩ Z[alpha] for I = (e + d(alpha + beta)), stored as a
/// polynomial in alpha reduced mod the own field's defining polynomial.
struct ChiGenerator {
  IntPoly poly_in_alpha;
  NumberFieldSpec own_field;
  NumberFieldSpec other_field;
  PrincipalIdealSpec ideal;

  /// I ∩ Z[alpha] = (0): no divisibility information on this side.
  bool is_zero() const noexcept { return poly_in_alpha.is_zero(); }
};

/// chi = sum_{i=0}^{m} (-d)^i (e + d*alpha)^(m-i) b_(m-i), with g = sum b_i x^i
/// the other field's polynomial. Evaluated by Horner in Omega = e + d*alpha.
ChiGenerator chi_generator(const PrincipalIdealSpec& ideal, const NumberFieldSpec& own, const NumberFieldSpec& other);

/// x -> -x - e/d mod p. Undefined (undefined_map) when p | d.
mpz_class phi_map(const PrincipalIdealSpec& ideal, const Prime& p, const mpz_class& x);

/// e + d*r == 0 mod p.
bool divides_principal(const mpz_class& r, const Prime& p, const PrincipalIdealSpec& ideal);
bool divides_principal(const FirstDegreePrime& prime, const PrincipalIdealSpec& ideal);

/// chi(r) == 0 mod p; the prime must live in chi's own field.
bool divides_chi(const FirstDegreePrime& prime, const ChiGenerator& chi);

/// All four hold: g(phi(r)) == 0, f(phi(s)) == 0, phi(r) != s, phi(s) != r (mod p).
bool is_exceptional(const mpz_class& r, const mpz_class& s, const Prime& p, const PrincipalIdealSpec& ideal,
                    const IntPoly& f, const IntPoly& g);

struct Divides {
  FirstDegreePrime combined;
};

struct ExceptionalSkip {
  mpz_class r;
  mpz_class s;
  mpz_class p;
  mpz_class phi_r;
  mpz_class phi_s;
};

using CombinationVerdict = std::variant<Divides, ExceptionalSkip>;

/// Transfers subfield divisibility (r,p) | I_alpha and (s,p) | I_beta up to the
/// compositum. Requires exactly two subfields and both hypotheses.
CombinationVerdict combination_divides(const mpz_class& r, const mpz_class& s, const Prime& p,
                                       const PrincipalIdealSpec& ideal, const CompositeFieldSpec& composite);

/// For (t,p) | I with t == r + s: do (r,p) | I_alpha and (s,p) | I_beta?
/// Expected to be always true; callers report false as a theorem violation.
bool converse_components_divide(const FirstDegreePrime& t, const mpz_class& r, const mpz_class& s,
                                const PrincipalIdealSpec& ideal, const ChiGenerator& chi_alpha,
                                const ChiGenerator& chi_beta);

/// N(e + d*theta) = Res(h, e + d x), signed.
mpz_class ideal_norm(const PrincipalIdealSpec& ideal, const IntPoly& h);

/// Norm of chi over its own field: Res(f, chi).
mpz_class chi_norm(const ChiGenerator& chi);

/// Largest k with p^k | n.
unsigned long norm_valuation(const mpz_class& n, const Prime& p);

}  // namespace fdpi
