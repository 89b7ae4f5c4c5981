#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fdpi/field_builder.hpp"
#include "fdpi/int_poly.hpp"

namespace fdpi {

enum class Strategy { standard, composite };

const char* to_string(Strategy s) noexcept;
Strategy parse_strategy(const std::string& name);

struct FactorBaseEntry {
  std::uint64_t p;
  std::uint64_t r;

  friend auto operator<=>(const FactorBaseEntry&, const FactorBaseEntry&) = default;
};

/// All first-degree primes of norm <= bound, sorted by (p, r).
struct FactorBase {
  std::vector<FactorBaseEntry> entries;
  std::uint64_t bound = 0;
  Strategy strategy = Strategy::standard;
};

/// Roots of the compositum polynomial mod p.
std::vector<std::uint64_t> standard_residues(const IntPoly& compositum, std::uint64_t p);

/// Deduplicated sums of subfield roots mod p. Each sum is checked against the
/// compositum polynomial; a non-root raises internal.
std::vector<std::uint64_t> composite_residues(const std::vector<IntPoly>& subfields, const IntPoly& compositum,
                                              std::uint64_t p);

FactorBase generate_standard(const CompositeFieldSpec& composite, std::uint64_t bound);
FactorBase generate_composite(const CompositeFieldSpec& composite, std::uint64_t bound);
FactorBase generate_factor_base(const CompositeFieldSpec& composite, std::uint64_t bound, Strategy strategy);

/// "p r" per line, ascending.
void write_factor_base(std::ostream& os, const FactorBase& fb);
std::vector<FactorBaseEntry> parse_factor_base(const std::string& text);

}  // namespace fdpi
