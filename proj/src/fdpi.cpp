#include "fdpi/fdpi.hpp"

#include "fdpi/detail/fp_algorithms.hpp"
#include "fdpi/error.hpp"

namespace fdpi {

namespace {

mpz_class mod(const mpz_class& a, const mpz_class& p) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

bool vanishes_at(const IntPoly& f, const mpz_class& r, const Prime& p) {
  const BigField F(p);
  return F.is_zero(reduce(f, F).eval(F.from(r)));
}

// Roots of each subfield polynomial mod p, in subfield order.
std::vector<std::vector<mpz_class>> subfield_roots(const CompositeFieldSpec& composite, const Prime& p) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(composite.subfields().size());
  for (const auto& s : composite.subfields()) out.push_back(roots_mod_p(reduce_mod(s.defining_poly(), p)));
  return out;
}

}  // namespace

std::vector<mpz_class> roots_mod_p(const ModPoly& f, std::optional<std::uint64_t> seed) {
  const Prime p = f.field().prime();
  if (p.fits_word()) {
    std::vector<mpz_class> out;
    for (std::uint64_t r : roots_mod_p(convert(f, WordField(p)), seed))
      out.emplace_back(static_cast<unsigned long>(r));
    return out;
  }
  return detail::find_roots(f, seed ? *seed : detail::derived_seed(f));
}

std::vector<std::uint64_t> roots_mod_p(const WordModPoly& f, std::optional<std::uint64_t> seed) {
  return detail::find_roots(f, seed ? *seed : detail::derived_seed(f));
}

FirstDegreePrime::FirstDegreePrime(NumberFieldSpec field, mpz_class residue, Prime norm)
    : field_(std::move(field)), residue_(mod(residue, norm.value())), norm_(std::move(norm)) {
  if (!vanishes_at(field_.defining_poly(), residue_, norm_))
    fail(ErrorKind::invalid_argument, "(" + residue_.get_str() + ", " + norm_.value().get_str() +
                                          ") is not a first-degree prime of " + field_.label());
}

std::vector<FirstDegreePrime> enumerate_fdpi(const NumberFieldSpec& field, const Prime& p) {
  std::vector<FirstDegreePrime> out;
  for (auto& r : roots_mod_p(reduce_mod(field.defining_poly(), p))) out.emplace_back(field, std::move(r), p);
  return out;
}

std::vector<FirstDegreePrime> enumerate_fdpi(const CompositeFieldSpec& field, const Prime& p) {
  return enumerate_fdpi(field.compositum(), p);
}

FirstDegreePrime combine(std::span<const FirstDegreePrime> parts, const CompositeFieldSpec& composite) {
  const auto& subs = composite.subfields();
  if (parts.size() != subs.size())
    fail(ErrorKind::invalid_combination, "expected one prime per subfield");
  const Prime& p = parts.front().norm();
  mpz_class sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].norm() == p)) fail(ErrorKind::invalid_combination, "parts have different norms");
    if (!(parts[i].field() == subs[i]))
      fail(ErrorKind::invalid_combination, "part " + std::to_string(i) + " does not belong to subfield " +
                                               subs[i].label());
    sum += parts[i].residue();
  }
  sum = mod(sum, p.value());
  if (!vanishes_at(composite.compositum_poly(), sum, p))
    fail(ErrorKind::internal, "combined residue " + sum.get_str() + " is not a root of the compositum mod " +
                                  p.value().get_str());
  return FirstDegreePrime(composite.compositum(), std::move(sum), p);
}

std::vector<std::vector<mpz_class>> decompose(const FirstDegreePrime& t, const CompositeFieldSpec& composite) {
  if (!(t.field() == composite.compositum()))
    fail(ErrorKind::field_mismatch, "prime does not belong to the compositum");
  const Prime& p = t.norm();
  const mpz_class& pv = p.value();
  const auto roots = subfield_roots(composite, p);
  const std::size_t k = roots.size();
  const BigField F(p);
  const ModPoly last = reduce(composite.subfields().back().defining_poly(), F);

  std::vector<std::vector<mpz_class>> out;
  std::vector<mpz_class> tuple(k);
  // Odometer over the first k-1 root sets; the last component is forced.
  std::vector<std::size_t> idx(k - 1, 0);
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (roots[i].empty()) return out;
  for (;;) {
    mpz_class partial = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      tuple[i] = roots[i][idx[i]];
      partial += tuple[i];
    }
    tuple[k - 1] = mod(t.residue() - partial, pv);
    if (F.is_zero(last.eval(tuple[k - 1]))) out.push_back(tuple);

    std::size_t pos = 0;
    while (pos + 1 < k && ++idx[pos] == roots[pos].size()) idx[pos++] = 0;
    if (pos + 1 >= k) break;
  }
  return out;
}

bool is_simple_root(const IntPoly& r, const mpz_class& t, const Prime& p) {
  const BigField F(p);
  const ModPoly rp = reduce(r, F);
  const auto tv = F.from(t);
  if (!F.is_zero(rp.eval(tv)))
    fail(ErrorKind::invalid_argument, t.get_str() + " is not a root mod " + p.value().get_str());
  return !F.is_zero(rp.derivative().eval(tv));
}

}  // namespace fdpi
