#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "fdpi/int_poly.hpp"
#include "fdpi/mod_poly.hpp"
#include "fdpi/primes.hpp"

namespace fdpi {

/// Q[x]/(f) for a monic squarefree f, taken as irreducible (not decided here).
/// Copies share one immutable record.
class NumberFieldSpec {
 public:
  explicit NumberFieldSpec(IntPoly defining_poly, std::string label = {});

  const IntPoly& defining_poly() const noexcept { return data_->poly; }
  const std::string& label() const noexcept { return data_->label; }
  int degree() const noexcept { return data_->poly.degree(); }

  friend bool operator==(const NumberFieldSpec& a, const NumberFieldSpec& b) {
    return a.data_ == b.data_ || a.data_->poly == b.data_->poly;
  }

 private:
  struct Data {
    IntPoly poly;
    std::string label;
  };
  std::shared_ptr<const Data> data_;
};

/// Squarefree over Q; certified at a small prime when possible, else by the discriminant.
bool is_squarefree_over_q(const IntPoly& f);

enum class DisjointnessCertificate {
  coprime_discriminants,
  irreducible_mod_p,
  coprime_degrees_likely_normal,
};

const char* to_string(DisjointnessCertificate c) noexcept;

struct Disjoint {
  DisjointnessCertificate certificate;
  /// gcd of the discriminants, the witness prime, or 0 for the degree criterion.
  mpz_class witness;
  /// The normality criterion rests on a scan, not a proof.
  bool heuristic = false;

  std::string reason() const;
};

struct UnknownDisjointness {};

using DisjointnessResult = std::variant<Disjoint, UnknownDisjointness>;

inline constexpr std::uint64_t kDisjointnessPrimeLimit = 10000;
inline constexpr std::size_t kDefaultNormalityBudget = 25;

DisjointnessResult check_linear_disjointness(const IntPoly& f, const IntPoly& g);
/// Same, with the composite resultant of f and g already in hand.
DisjointnessResult check_linear_disjointness(const IntPoly& f, const IntPoly& g, const IntPoly& compositum);

/// Sorted degrees of the irreducible factors of a squarefree f over F_p.
/// Throws ramified_prime if f is not squarefree mod p.
std::vector<int> factor_degrees(const ModPoly& f);
std::vector<int> factor_degrees(const WordModPoly& f);

struct LikelyNormal {
  std::size_t primes_scanned = 0;
};
struct NotNormal {
  std::uint64_t witness;
};
using NormalityVerdict = std::variant<LikelyNormal, NotNormal>;

/// Scans the first `prime_budget` primes not dividing disc f. Unequal local
/// degrees at any of them prove f is not normal; otherwise the verdict is
/// LikelyNormal. Reports the smallest witness.
NormalityVerdict normality_heuristic(const IntPoly& f, std::size_t prime_budget = kDefaultNormalityBudget);

struct CertifiedDisjoint {
  /// One certificate per fold step.
  std::vector<Disjoint> witnesses;
};
struct AssumedDisjoint {
  /// Fold steps (1-based: step k joins subfield k+1) without a certificate.
  std::vector<std::size_t> uncertified_steps;
};
using DisjointnessStatus = std::variant<CertifiedDisjoint, AssumedDisjoint>;

class CompositeFieldSpec {
 public:
  CompositeFieldSpec(std::vector<NumberFieldSpec> subfields, NumberFieldSpec compositum,
                     DisjointnessStatus disjointness);

  const std::vector<NumberFieldSpec>& subfields() const noexcept { return subfields_; }
  const NumberFieldSpec& compositum() const noexcept { return compositum_; }
  const IntPoly& compositum_poly() const noexcept { return compositum_.defining_poly(); }
  const DisjointnessStatus& disjointness() const noexcept { return disjointness_; }
  bool certified() const noexcept { return std::holds_alternative<CertifiedDisjoint>(disjointness_); }
  int degree() const noexcept { return compositum_.degree(); }

 private:
  std::vector<NumberFieldSpec> subfields_;
  NumberFieldSpec compositum_;
  DisjointnessStatus disjointness_;
};

/// Left fold ((f1 . f2) . f3) ... of composite resultants. A compositum
/// polynomial with repeated roots disproves full degree and raises not_disjoint.
CompositeFieldSpec build_compositum(std::vector<NumberFieldSpec> subfields);
CompositeFieldSpec build_compositum(const std::vector<IntPoly>& subfield_polys);

}  // namespace fdpi
