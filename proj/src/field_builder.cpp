#include "fdpi/field_builder.hpp"

#include <algorithm>
#include <numeric>

#include "fdpi/detail/fp_algorithms.hpp"
#include "fdpi/error.hpp"
#include "fdpi/resultant.hpp"

namespace fdpi {

namespace {

constexpr std::size_t kSquarefreeProbePrimes = 200;

bool squarefree_mod(const IntPoly& f, std::uint64_t p) {
  const WordField F(Prime::trusted(p));
  const WordModPoly fp = reduce(f, F);
  return fp.degree() == f.degree() && detail::is_squarefree(fp);
}

bool uniform(const std::vector<int>& degrees) {
  return std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) == degrees.end();
}

}  // namespace

NumberFieldSpec::NumberFieldSpec(IntPoly defining_poly, std::string label) {
  if (defining_poly.degree() < 1)
    fail(ErrorKind::invalid_argument, "defining polynomial must have degree >= 1");
  if (!defining_poly.is_monic())
    fail(ErrorKind::invalid_argument, "defining polynomial must be monic: " + defining_poly.to_string());
  if (!is_squarefree_over_q(defining_poly))
    fail(ErrorKind::invalid_argument, "defining polynomial is not squarefree: " + defining_poly.to_string());
  if (label.empty()) label = defining_poly.to_string();
  data_ = std::make_shared<const Data>(Data{std::move(defining_poly), std::move(label)});
}

bool is_squarefree_over_q(const IntPoly& f) {
  if (f.degree() < 1) return true;
  std::size_t tried = 0;
  bool found = false;
  for_each_prime(2, 1u << 16, [&](std::uint64_t p) {
    if (found || tried >= kSquarefreeProbePrimes) return;
    ++tried;
    if (squarefree_mod(f, p)) found = true;
  });
  if (found) return true;
  return sylvester_resultant(f, f.derivative()) != 0;
}

const char* to_string(DisjointnessCertificate c) noexcept {
  switch (c) {
    case DisjointnessCertificate::coprime_discriminants: return "coprime-discriminants";
    case DisjointnessCertificate::irreducible_mod_p: return "irreducible-mod-p";
    case DisjointnessCertificate::coprime_degrees_likely_normal: return "coprime-degrees-likely-normal";
  }
  return "unknown";
}

std::string Disjoint::reason() const {
  switch (certificate) {
    case DisjointnessCertificate::coprime_discriminants:
      return "gcd of discriminants is 1";
    case DisjointnessCertificate::irreducible_mod_p:
      return "compositum polynomial irreducible mod " + witness.get_str();
    case DisjointnessCertificate::coprime_degrees_likely_normal:
      return "coprime degrees, both fields likely normal (heuristic)";
  }
  return {};
}

DisjointnessResult check_linear_disjointness(const IntPoly& f, const IntPoly& g) {
  return check_linear_disjointness(f, g, composite_resultant(f, g));
}

DisjointnessResult check_linear_disjointness(const IntPoly& f, const IntPoly& g, const IntPoly& compositum) {
  if (!f.is_monic() || !g.is_monic())
    fail(ErrorKind::invalid_argument, "disjointness check needs monic polynomials");

  mpz_class common;
  const mpz_class df = discriminant(f), dg = discriminant(g);
  mpz_gcd(common.get_mpz_t(), df.get_mpz_t(), dg.get_mpz_t());
  if (common == 1) return Disjoint{DisjointnessCertificate::coprime_discriminants, common, false};

  std::optional<std::uint64_t> witness;
  for_each_prime(2, kDisjointnessPrimeLimit, [&](std::uint64_t p) {
    if (witness) return;
    const WordField F(Prime::trusted(p));
    const WordModPoly r = reduce(compositum, F);
    if (r.degree() != compositum.degree() || !detail::is_squarefree(r)) return;
    if (detail::is_irreducible_squarefree(r)) witness = p;
  });
  if (witness)
    return Disjoint{DisjointnessCertificate::irreducible_mod_p,
                    mpz_class(static_cast<unsigned long>(*witness)), false};

  if (std::gcd(f.degree(), g.degree()) == 1 &&
      std::holds_alternative<LikelyNormal>(normality_heuristic(f)) &&
      std::holds_alternative<LikelyNormal>(normality_heuristic(g)))
    return Disjoint{DisjointnessCertificate::coprime_degrees_likely_normal, 0, true};

  return UnknownDisjointness{};
}

std::vector<int> factor_degrees(const ModPoly& f) {
  if (const Prime p = f.field().prime(); p.fits_word()) return factor_degrees(convert(f, WordField(p)));
  if (!detail::is_squarefree(f))
    fail(ErrorKind::ramified_prime, "polynomial is not squarefree mod " + f.field().modulus().get_str());
  return detail::distinct_degree_profile(f);
}

std::vector<int> factor_degrees(const WordModPoly& f) {
  if (!detail::is_squarefree(f))
    fail(ErrorKind::ramified_prime, "polynomial is not squarefree mod " + std::to_string(f.field().modulus()));
  return detail::distinct_degree_profile(f);
}

NormalityVerdict normality_heuristic(const IntPoly& f, std::size_t prime_budget) {
  std::size_t scanned = 0;
  std::optional<std::uint64_t> witness;
  for_each_prime(2, 1u << 20, [&](std::uint64_t p) {
    if (witness || scanned >= prime_budget) return;
    if (!squarefree_mod(f, p)) return;  // p divides disc f
    ++scanned;
    const WordModPoly fp = reduce(f, WordField(Prime::trusted(p)));
    if (!uniform(detail::distinct_degree_profile(fp))) witness = p;
  });
  if (witness) return NotNormal{*witness};
  return LikelyNormal{scanned};
}

CompositeFieldSpec::CompositeFieldSpec(std::vector<NumberFieldSpec> subfields, NumberFieldSpec compositum,
                                       DisjointnessStatus disjointness)
    : subfields_(std::move(subfields)), compositum_(std::move(compositum)), disjointness_(std::move(disjointness)) {}

CompositeFieldSpec build_compositum(std::vector<NumberFieldSpec> subfields) {
  if (subfields.size() < 2) fail(ErrorKind::invalid_argument, "a compositum needs at least two subfields");
  for (const auto& s : subfields)
    if (s.degree() < 2)
      fail(ErrorKind::invalid_argument, "degree-1 subfield " + s.label() + " is degenerate");

  IntPoly acc = subfields.front().defining_poly();
  std::vector<Disjoint> witnesses;
  std::vector<std::size_t> uncertified;
  for (std::size_t k = 1; k < subfields.size(); ++k) {
    const IntPoly& next = subfields[k].defining_poly();
    IntPoly r = composite_resultant(acc, next);
    if (!is_squarefree_over_q(r))
      fail(ErrorKind::not_disjoint, "compositum polynomial with " + subfields[k].label() +
                                        " has repeated roots; the fields are not linearly disjoint");
    auto verdict = check_linear_disjointness(acc, next, r);
    if (auto* d = std::get_if<Disjoint>(&verdict))
      witnesses.push_back(*d);
    else
      uncertified.push_back(k);
    acc = std::move(r);
  }

  DisjointnessStatus status = uncertified.empty() ? DisjointnessStatus(CertifiedDisjoint{std::move(witnesses)})
                                                   : DisjointnessStatus(AssumedDisjoint{std::move(uncertified)});
  NumberFieldSpec compositum(std::move(acc), "compositum");
  return CompositeFieldSpec(std::move(subfields), std::move(compositum), std::move(status));
}

CompositeFieldSpec build_compositum(const std::vector<IntPoly>& subfield_polys) {
  std::vector<NumberFieldSpec> fields;
  fields.reserve(subfield_polys.size());
  for (const auto& p : subfield_polys) fields.emplace_back(p);
  return build_compositum(std::move(fields));
}

}  // namespace fdpi
