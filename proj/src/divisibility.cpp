#include "fdpi/divisibility.hpp"

#include "fdpi/error.hpp"
#include "fdpi/mod_poly.hpp"
#include "fdpi/resultant.hpp"

namespace fdpi {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

bool vanishes_mod(const IntPoly& f, const mpz_class& x, const Prime& p) {
  const BigField F(p);
  return F.is_zero(reduce(f, F).eval(F.from(x)));
}

}  // namespace

PrincipalIdealSpec::PrincipalIdealSpec(mpz_class e, mpz_class d) : e_(std::move(e)), d_(std::move(d)) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), e_.get_mpz_t(), d_.get_mpz_t());
  if (g != 1)
    fail(ErrorKind::invalid_ideal, "e = " + e_.get_str() + " and d = " + d_.get_str() + " are not coprime");
}

ChiGenerator chi_generator(const PrincipalIdealSpec& ideal, const NumberFieldSpec& own, const NumberFieldSpec& other) {
  const IntPoly& f = own.defining_poly();
  const IntPoly& g = other.defining_poly();
  const std::size_t m = static_cast<std::size_t>(g.degree());
  const IntPoly omega(std::vector<mpz_class>{ideal.e(), ideal.d()});
  const mpz_class minus_d = -ideal.d();

  // Horner in Omega: acc = b_m; acc = acc*Omega + b_j (-d)^(m-j) for j = m-1..0.
  IntPoly acc = IntPoly::constant(g.lead());
  mpz_class dpow = 1;
  for (std::size_t j = m; j-- > 0;) {
    dpow *= minus_d;
    acc = rem_monic(acc * omega + IntPoly::constant(g[j] * dpow), f);
  }
  acc = rem_monic(acc, f);
  return ChiGenerator{std::move(acc), own, other, ideal};
}

mpz_class phi_map(const PrincipalIdealSpec& ideal, const Prime& p, const mpz_class& x) {
  const mpz_class& pv = p.value();
  mpz_class dinv;
  const mpz_class d = mod(ideal.d(), pv);
  if (sgn(d) == 0 || mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pv.get_mpz_t()) == 0)
    fail(ErrorKind::undefined_map, "phi is undefined when p = " + pv.get_str() + " divides d");
  return mod(-x - dinv * ideal.e(), pv);
}

bool divides_principal(const mpz_class& r, const Prime& p, const PrincipalIdealSpec& ideal) {
  return sgn(mod(ideal.e() + ideal.d() * r, p.value())) == 0;
}

bool divides_principal(const FirstDegreePrime& prime, const PrincipalIdealSpec& ideal) {
  return divides_principal(prime.residue(), prime.norm(), ideal);
}

bool divides_chi(const FirstDegreePrime& prime, const ChiGenerator& chi) {
  if (!(prime.field() == chi.own_field))
    fail(ErrorKind::field_mismatch, "prime lives in " + prime.field().label() + ", chi in " + chi.own_field.label());
  return vanishes_mod(chi.poly_in_alpha, prime.residue(), prime.norm());
}

bool is_exceptional(const mpz_class& r, const mpz_class& s, const Prime& p, const PrincipalIdealSpec& ideal,
                    const IntPoly& f, const IntPoly& g) {
  const mpz_class& pv = p.value();
  const mpz_class phi_r = phi_map(ideal, p, r);
  const mpz_class phi_s = phi_map(ideal, p, s);
  return vanishes_mod(g, phi_r, p) && vanishes_mod(f, phi_s, p) && phi_r != mod(s, pv) && phi_s != mod(r, pv);
}

CombinationVerdict combination_divides(const mpz_class& r, const mpz_class& s, const Prime& p,
                                       const PrincipalIdealSpec& ideal, const CompositeFieldSpec& composite) {
  if (composite.subfields().size() != 2)
    fail(ErrorKind::invalid_argument, "divisibility transfer is defined for two subfields");
  const NumberFieldSpec& fa = composite.subfields()[0];
  const NumberFieldSpec& fb = composite.subfields()[1];
  const FirstDegreePrime pr(fa, r, p);
  const FirstDegreePrime ps(fb, s, p);
  if (!divides_chi(pr, chi_generator(ideal, fa, fb)) || !divides_chi(ps, chi_generator(ideal, fb, fa)))
    fail(ErrorKind::invalid_argument, "subfield primes must divide the restricted ideals");

  if (is_exceptional(pr.residue(), ps.residue(), p, ideal, fa.defining_poly(), fb.defining_poly()))
    return ExceptionalSkip{pr.residue(), ps.residue(), p.value(), phi_map(ideal, p, pr.residue()),
                           phi_map(ideal, p, ps.residue())};

  const FirstDegreePrime parts[] = {pr, ps};
  FirstDegreePrime combined = combine(parts, composite);
  if (!divides_principal(combined, ideal))
    fail(ErrorKind::theorem_violation, "non-exceptional combination (" + combined.residue().get_str() + ", " +
                                           p.value().get_str() + ") does not divide the ideal");
  return Divides{std::move(combined)};
}

bool converse_components_divide(const FirstDegreePrime& t, const mpz_class& r, const mpz_class& s,
                                const PrincipalIdealSpec& ideal, const ChiGenerator& chi_alpha,
                                const ChiGenerator& chi_beta) {
  if (!divides_principal(t, ideal)) fail(ErrorKind::invalid_argument, "(t, p) must divide the ideal");
  const Prime& p = t.norm();
  if (mod(r + s - t.residue(), p.value()) != 0) fail(ErrorKind::invalid_argument, "r + s must equal t mod p");
  const FirstDegreePrime pr(chi_alpha.own_field, r, p);
  const FirstDegreePrime ps(chi_beta.own_field, s, p);
  return divides_chi(pr, chi_alpha) && divides_chi(ps, chi_beta);
}

mpz_class ideal_norm(const PrincipalIdealSpec& ideal, const IntPoly& h) {
  if (!h.is_monic()) fail(ErrorKind::invalid_argument, "ideal_norm expects a monic polynomial");
  return sylvester_resultant(h, IntPoly(std::vector<mpz_class>{ideal.e(), ideal.d()}));
}

mpz_class chi_norm(const ChiGenerator& chi) {
  if (chi.is_zero()) return 0;
  return sylvester_resultant(chi.own_field.defining_poly(), chi.poly_in_alpha);
}

unsigned long norm_valuation(const mpz_class& n, const Prime& p) {
  if (sgn(n) == 0) fail(ErrorKind::infinite_valuation, "valuation of zero is infinite");
  mpz_class rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.value().get_mpz_t());
}

}  // namespace fdpi
