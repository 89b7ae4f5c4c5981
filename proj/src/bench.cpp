#include "fdpi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <thread>

#include "fdpi/detail/fp_algorithms.hpp"
#include "fdpi/error.hpp"
#include "fdpi/factor_base.hpp"
#include "fdpi/fdpi.hpp"
#include "fdpi/primes.hpp"

namespace fdpi {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<IntPoly> subfield_polys(const CompositeFieldSpec& composite) {
  std::vector<IntPoly> out;
  for (const auto& s : composite.subfields()) out.push_back(s.defining_poly());
  return out;
}

// Bucket i covers [b_i, b_{i+1} - 1] with b_i = lo + floor(i * span / k).
std::vector<std::pair<std::uint64_t, std::uint64_t>> bucket_bounds(std::uint64_t lo, std::uint64_t hi, unsigned k) {
  const std::uint64_t span = hi >= lo ? hi - lo + 1 : 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (unsigned i = 0; i < k; ++i) {
    const auto a = lo + static_cast<std::uint64_t>((static_cast<unsigned __int128>(span) * i) / k);
    const auto b = lo + static_cast<std::uint64_t>((static_cast<unsigned __int128>(span) * (i + 1)) / k);
    out.emplace_back(a, b - 1);
  }
  return out;
}

struct PrimeResult {
  std::vector<std::uint64_t> standard;
  std::vector<std::uint64_t> composite;
};

void census_bucket(const CompositeFieldSpec& composite, const std::vector<IntPoly>& subs,
                   const std::vector<std::uint64_t>& primes, unsigned threads, BenchRow& row,
                   std::vector<MissedPrime>& misses) {
  const IntPoly& r = composite.compositum_poly();
  std::vector<PrimeResult> results(primes.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      results[i].standard = standard_residues(r, primes[i]);
      results[i].composite = composite_residues(subs, r, primes[i]);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || primes.size() < 2 * threads) {
    work(0, primes.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (primes.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = t * chunk, e = std::min(primes.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& st = results[i].standard;
    const auto& co = results[i].composite;
    row.std_count += st.size();
    row.comp_count += co.size();
    if (!std::includes(st.begin(), st.end(), co.begin(), co.end()))
      fail(ErrorKind::internal, "composite strategy produced a non-root at p = " + std::to_string(primes[i]));
    std::vector<std::uint64_t> missed;
    std::set_difference(st.begin(), st.end(), co.begin(), co.end(), std::back_inserter(missed));
    const Prime p = Prime::trusted(primes[i]);
    for (std::uint64_t t : missed)
      misses.push_back({primes[i], t, is_simple_root(r, mpz_class(static_cast<unsigned long>(t)), p)});
  }
}

}  // namespace

std::uint64_t BenchReport::std_total() const {
  std::uint64_t s = 0;
  for (const auto& r : rows) s += r.std_count;
  return s;
}
std::uint64_t BenchReport::comp_total() const {
  std::uint64_t s = 0;
  for (const auto& r : rows) s += r.comp_count;
  return s;
}
double BenchReport::std_secs_total() const {
  double s = 0;
  for (const auto& r : rows) s += r.std_secs;
  return s;
}
double BenchReport::comp_secs_total() const {
  double s = 0;
  for (const auto& r : rows) s += r.comp_secs;
  return s;
}

BenchReport bench_compare(const CompositeFieldSpec& composite, const BenchOptions& options) {
  if (options.buckets == 0) fail(ErrorKind::invalid_argument, "bucket count must be positive");
  BenchReport report;
  report.mode = options.mode;
  const auto subs = subfield_polys(composite);
  const IntPoly& r = composite.compositum_poly();

  for (auto [lo, hi] : bucket_bounds(options.lo, options.hi, options.buckets)) {
    BenchRow row;
    row.bucket_lo = lo;
    row.bucket_hi = hi;
    auto t0 = Clock::now();
    const auto primes = primes_between(lo, hi);
    report.sieve_secs += seconds_since(t0);

    if (options.mode == BenchMode::census) {
      census_bucket(composite, subs, primes, options.threads, row, report.misses);
    } else {
      t0 = Clock::now();
      for (std::uint64_t p : primes) row.std_count += standard_residues(r, p).size();
      row.std_secs = seconds_since(t0);
      t0 = Clock::now();
      for (std::uint64_t p : primes) row.comp_count += composite_residues(subs, r, p).size();
      row.comp_secs = seconds_since(t0);
    }
    report.rows.push_back(row);
  }
  return report;
}

void write_bench_csv(std::ostream& os, const BenchReport& report) {
  os << "bucket_lo,bucket_hi,std_count,comp_count,diff,std_secs,comp_secs\n";
  for (const auto& row : report.rows) {
    os << row.bucket_lo << ',' << row.bucket_hi << ',' << row.std_count << ',' << row.comp_count << ','
       << row.diff() << ',';
    if (report.mode == BenchMode::timed)
      os << std::fixed << std::setprecision(6) << row.std_secs << ',' << row.comp_secs;
    else
      os << ',';
    os << '\n';
  }
}

void write_misses_csv(std::ostream& os, const BenchReport& report) {
  os << "p,r,simple_root\n";
  for (const auto& m : report.misses) os << m.p << ',' << m.r << ',' << (m.simple_root ? 1 : 0) << '\n';
}

IntPoly seeded_irreducible(int degree, std::uint64_t seed, long coeff_bound) {
  if (degree < 1) fail(ErrorKind::invalid_argument, "degree must be positive");
  detail::CounterRng rng(seed);
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(coeff_bound) + 1;
  const auto witness_primes = primes_up_to(1000);
  for (;;) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i)
      c[i] = mpz_class(static_cast<long>(rng.next() % width) - coeff_bound);
    c[degree] = 1;
    if (sgn(c[0]) == 0) continue;
    IntPoly f(std::move(c));
    for (std::uint64_t p : witness_primes) {
      const WordModPoly fp = reduce(f, WordField(Prime::trusted(p)));
      if (detail::is_squarefree(fp) && detail::is_irreducible_squarefree(fp)) return f;
    }
  }
}

CompositeFieldSpec seeded_compositum(const std::vector<int>& degrees, std::uint64_t seed, long coeff_bound) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::vector<IntPoly> polys;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      polys.push_back(seeded_irreducible(degrees[i], detail::splitmix64(seed + i + attempt * degrees.size()),
                                         coeff_bound));
    try {
      return build_compositum(polys);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::not_disjoint) throw;
    }
  }
}

}  // namespace fdpi
