#include "fdpi/factor_base.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "fdpi/detail/fp_algorithms.hpp"
#include "fdpi/error.hpp"
#include "fdpi/primes.hpp"

namespace fdpi {

const char* to_string(Strategy s) noexcept { return s == Strategy::standard ? "standard" : "composite"; }

Strategy parse_strategy(const std::string& name) {
  if (name == "standard") return Strategy::standard;
  if (name == "composite") return Strategy::composite;
  fail(ErrorKind::invalid_argument, "unknown strategy '" + name + "'");
}

std::vector<std::uint64_t> standard_residues(const IntPoly& compositum, std::uint64_t p) {
  const WordField F(Prime::trusted(p));
  return detail::find_roots(reduce(compositum, F));
}

std::vector<std::uint64_t> composite_residues(const std::vector<IntPoly>& subfields, const IntPoly& compositum,
                                              std::uint64_t p) {
  const WordField F(Prime::trusted(p));
  std::vector<std::uint64_t> sums{0};
  std::vector<std::uint64_t> next;
  for (const auto& f : subfields) {
    const auto roots = detail::find_roots(reduce(f, F));
    if (roots.empty()) return {};
    next.clear();
    for (std::uint64_t a : sums)
      for (std::uint64_t r : roots) next.push_back(F.add(a, r));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums.swap(next);
  }
  const WordModPoly rp = reduce(compositum, F);
  for (std::uint64_t t : sums)
    if (!F.is_zero(rp.eval(t)))
      fail(ErrorKind::internal, "combination " + std::to_string(t) + " is not a compositum root mod " +
                                    std::to_string(p));
  return sums;
}

namespace {

std::vector<IntPoly> subfield_polys(const CompositeFieldSpec& composite) {
  std::vector<IntPoly> out;
  for (const auto& s : composite.subfields()) out.push_back(s.defining_poly());
  return out;
}

}  // namespace

FactorBase generate_standard(const CompositeFieldSpec& composite, std::uint64_t bound) {
  FactorBase fb{{}, bound, Strategy::standard};
  const IntPoly& r = composite.compositum_poly();
  for_each_prime(2, bound, [&](std::uint64_t p) {
    for (std::uint64_t t : standard_residues(r, p)) fb.entries.push_back({p, t});
  });
  return fb;
}

FactorBase generate_composite(const CompositeFieldSpec& composite, std::uint64_t bound) {
  FactorBase fb{{}, bound, Strategy::composite};
  const auto subs = subfield_polys(composite);
  const IntPoly& r = composite.compositum_poly();
  for_each_prime(2, bound, [&](std::uint64_t p) {
    for (std::uint64_t t : composite_residues(subs, r, p)) fb.entries.push_back({p, t});
  });
  return fb;
}

FactorBase generate_factor_base(const CompositeFieldSpec& composite, std::uint64_t bound, Strategy strategy) {
  return strategy == Strategy::standard ? generate_standard(composite, bound) : generate_composite(composite, bound);
}

void write_factor_base(std::ostream& os, const FactorBase& fb) {
  for (const auto& e : fb.entries) os << e.p << ' ' << e.r << '\n';
}

std::vector<FactorBaseEntry> parse_factor_base(const std::string& text) {
  std::vector<FactorBaseEntry> out;
  std::istringstream in(text);
  std::uint64_t p, r;
  while (in >> p >> r) out.push_back({p, r});
  return out;
}

}  // namespace fdpi
