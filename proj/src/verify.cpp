#include "fdpi/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fdpi/divisibility.hpp"
#include "fdpi/error.hpp"
#include "fdpi/fdpi.hpp"
#include "fdpi/field_builder.hpp"
#include "fdpi/resultant.hpp"

namespace fdpi {

namespace {

const char* const kSexticResultant = "Example only1normal resultant";
const char* const kOcticResultant = "Example x^4+1 resultant";
const char* const kRootsMod17 = "Example only1normal roots mod 17";
const char* const kNonCombination = "Example only1normal (13,17) non-combination";
const char* const kNorm5 = "Example x^4+1 (0,5) counterexample";
const char* const kDegree12Poly = "Degree-12 example compositum polynomial";
const char* const kChiAlpha = "Degree-12 example chi_alpha";
const char* const kChiBeta = "Degree-12 example chi_beta";
const char* const kResidues11 = "Degree-12 example FDPI residues mod 11";
const char* const kPhiValues = "Degree-12 example phi(1)=9, phi(3)=7";
const char* const kExceptional = "Degree-12 example exceptional verdict";
const char* const kNonDivisor = "Degree-12 example (4,11) does not divide I";

std::vector<long> residues_of(const std::vector<FirstDegreePrime>& primes) {
  std::vector<long> out;
  for (const auto& p : primes) out.push_back(p.residue().get_si());
  return out;
}

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  std::size_t ok = 0;
  for (const auto& c : checks) {
    if (c.passed) {
      ++ok;
      os << "PASS " << c.name << '\n';
    } else {
      os << "FAIL " << c.name << ": " << c.detail << '\n';
    }
  }
  os << (passed() ? "PASS" : "FAIL") << ' ' << ok << '/' << checks.size() << " assertions\n";
  return os.str();
}

std::vector<std::string> verification_check_names() {
  return {kSexticResultant, kOcticResultant, kRootsMod17, kNonCombination, kNorm5,     kDegree12Poly,
          kChiAlpha,        kChiBeta,        kResidues11, kPhiValues,      kExceptional, kNonDivisor};
}

VerificationReport verify_paper_examples(const VerificationOptions& options) {
  VerificationReport report;
  auto corrupt = [&](const char* name) { return options.corrupt == name; };
  auto poly = [&](const char* name, std::initializer_list<long> c) {
    IntPoly p(c);
    return corrupt(name) ? p + IntPoly{1} : p;
  };
  auto flag = [&](const char* name, bool expected) { return corrupt(name) ? !expected : expected; };
  auto run = [&](const char* name, const std::function<std::string()>& body) {
    // body returns an empty string on success, else the mismatch description.
    try {
      std::string detail = body();
      report.checks.push_back({name, detail.empty(), detail});
    } catch (const std::exception& e) {
      report.checks.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  auto expect_poly = [](const IntPoly& got, const IntPoly& want) -> std::string {
    return got == want ? std::string() : "got " + got.to_string() + ", expected " + want.to_string();
  };

  const IntPoly f2{-3, 0, 1};      // x^2 - 3
  const IntPoly g3{-2, 0, 0, 1};   // x^3 - 2
  const IntPoly g4{1, 0, 0, 0, 1}; // x^4 + 1

  run(kSexticResultant, [&] {
    return expect_poly(composite_resultant(f2, g3), poly(kSexticResultant, {-23, -36, 27, -4, -9, 0, 1}));
  });
  run(kOcticResultant, [&] {
    return expect_poly(composite_resultant(f2, g4), poly(kOcticResultant, {100, 0, -72, 0, 56, 0, -12, 0, 1}));
  });

  const Prime p17(17ul);
  const CompositeFieldSpec sextic = build_compositum(std::vector<IntPoly>{f2, g3});
  run(kRootsMod17, [&] {
    const auto ra = residues_of(enumerate_fdpi(sextic.subfields()[0], p17));
    const auto rb = residues_of(enumerate_fdpi(sextic.subfields()[1], p17));
    std::vector<long> want_b{8};
    if (corrupt(kRootsMod17)) want_b = {9};
    if (!ra.empty() || rb != want_b)
      return "roots of x^2-3: " + join(ra) + ", roots of x^3-2: " + join(rb) + ", expected {} and " + join(want_b);
    return std::string();
  });
  run(kNonCombination, [&] {
    const FirstDegreePrime t(sextic.compositum(), 13, p17);
    const bool empty = decompose(t, sextic).empty();
    return empty == flag(kNonCombination, true) ? std::string() : "decomposition of (13,17) is not empty";
  });

  run(kNorm5, [&] {
    const Prime p5(5ul);
    const CompositeFieldSpec octic = build_compositum(std::vector<IntPoly>{f2, g4});
    const bool subfields_empty =
        enumerate_fdpi(octic.subfields()[0], p5).empty() && enumerate_fdpi(octic.subfields()[1], p5).empty();
    const auto rc = residues_of(enumerate_fdpi(octic, p5));
    const bool has_zero = std::find(rc.begin(), rc.end(), 0L) != rc.end();
    const bool ok = subfields_empty && has_zero;
    return ok == flag(kNorm5, true) ? std::string()
                                    : "subfield FDPIs of norm 5 present or (0,5) missing; compositum roots " + join(rc);
  });

  const IntPoly f12a{19, 1, 1, 1};         // x^3 + x^2 + x + 19
  const IntPoly f12b{5, -7, -6, 0, 1};     // x^4 - 6x^2 - 7x + 5
  const CompositeFieldSpec dodecic = build_compositum(std::vector<IntPoly>{f12a, f12b});
  const NumberFieldSpec& fa = dodecic.subfields()[0];
  const NumberFieldSpec& fb = dodecic.subfields()[1];
  const PrincipalIdealSpec ideal(1, 1);
  const Prime p11(11ul);

  run(kDegree12Poly, [&] {
    return expect_poly(dodecic.compositum_poly(),
                       poly(kDegree12Poly, {24299, 255445, 185557, 120009, 32405, 8910, 5663, 824, 193, 11, -8, 4, 1}));
  });
  run(kChiAlpha, [&] {
    return expect_poly(chi_generator(ideal, fa, fb).poly_in_alpha, poly(kChiAlpha, {-50, -23, -4}));
  });
  run(kChiBeta, [&] {
    return expect_poly(chi_generator(ideal, fb, fa).poly_in_alpha, poly(kChiBeta, {-18, 2, 2, 1}));
  });
  run(kResidues11, [&] {
    const auto ra = residues_of(enumerate_fdpi(fa, p11));
    const auto rb = residues_of(enumerate_fdpi(fb, p11));
    std::vector<long> want_a{1, 2, 7}, want_b{3, 9};
    if (corrupt(kResidues11)) want_a = {1, 2, 8};
    if (ra != want_a || rb != want_b)
      return "got " + join(ra) + " and " + join(rb) + ", expected " + join(want_a) + " and " + join(want_b);
    return std::string();
  });
  run(kPhiValues, [&] {
    const long phi1 = phi_map(ideal, p11, 1).get_si(), phi3 = phi_map(ideal, p11, 3).get_si();
    const long want1 = corrupt(kPhiValues) ? 8 : 9;
    if (phi1 != want1 || phi3 != 7)
      return "phi(1) = " + std::to_string(phi1) + ", phi(3) = " + std::to_string(phi3);
    return std::string();
  });
  run(kExceptional, [&] {
    const bool exc = is_exceptional(1, 3, p11, ideal, f12a, f12b);
    const bool skip = std::holds_alternative<ExceptionalSkip>(combination_divides(1, 3, p11, ideal, dodecic));
    const bool ok = exc && skip;
    return ok == flag(kExceptional, true) ? std::string() : "(1,11)+(3,11) not reported as exceptional";
  });
  run(kNonDivisor, [&] {
    const FirstDegreePrime parts[] = {FirstDegreePrime(fa, 1, p11), FirstDegreePrime(fb, 3, p11)};
    const FirstDegreePrime t = combine(parts, dodecic);
    const bool ok = t.residue() == 4 && !divides_principal(t, ideal);
    return ok == flag(kNonDivisor, true) ? std::string() : "(t,11) = (" + t.residue().get_str() + ",11) divides I";
  });

  return report;
}

}  // namespace fdpi
