#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fdpi/field_builder.hpp"
#include "fdpi/int_poly.hpp"

namespace fdpi {

enum class BenchMode { timed, census };

struct BenchRow {
  std::uint64_t bucket_lo = 0;
  std::uint64_t bucket_hi = 0;  // inclusive
  std::uint64_t std_count = 0;
  std::uint64_t comp_count = 0;
  double std_secs = 0;
  double comp_secs = 0;

  std::uint64_t diff() const noexcept { return std_count - comp_count; }
};

/// A standard-strategy entry that the composite strategy did not produce.
struct MissedPrime {
  std::uint64_t p;
  std::uint64_t r;
  bool simple_root;
};

struct BenchReport {
  BenchMode mode = BenchMode::census;
  std::vector<BenchRow> rows;
  std::vector<MissedPrime> misses;  // census mode only
  double sieve_secs = 0;

  std::uint64_t std_total() const;
  std::uint64_t comp_total() const;
  double std_secs_total() const;
  double comp_secs_total() const;
};

struct BenchOptions {
  std::uint64_t lo = 2;
  std::uint64_t hi = 0;
  unsigned buckets = 10;
  BenchMode mode = BenchMode::census;
  /// Census only; timed runs are always sequential.
  unsigned threads = 1;
};

/// Runs both strategies over identical primes lo <= p <= hi, split into
/// equal-width buckets. Sieve time is kept out of the per-strategy timings.
BenchReport bench_compare(const CompositeFieldSpec& composite, const BenchOptions& options);

/// Header bucket_lo,bucket_hi,std_count,comp_count,diff,std_secs,comp_secs.
/// Census rows leave the timing columns empty so the file is reproducible.
void write_bench_csv(std::ostream& os, const BenchReport& report);
/// Header p,r,simple_root.
void write_misses_csv(std::ostream& os, const BenchReport& report);

/// Random monic polynomial with coefficients in [-coeff_bound, coeff_bound],
/// redrawn until it is irreducible modulo some prime below 1000 (which proves
/// irreducibility over Q). Fully determined by (degree, seed, coeff_bound).
IntPoly seeded_irreducible(int degree, std::uint64_t seed, long coeff_bound = 10);

/// Compositum of seeded_irreducible subfields of the given degrees; subfield i
/// uses seed splitmix64(seed + i), redrawing on a not_disjoint failure.
CompositeFieldSpec seeded_compositum(const std::vector<int>& degrees, std::uint64_t seed, long coeff_bound = 10);

}  // namespace fdpi
