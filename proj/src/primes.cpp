#include "fdpi/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fdpi/error.hpp"

namespace fdpi {

namespace {

constexpr std::array<unsigned, 13> kDeterministicBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr int kProbabilisticRounds = 64;

// Valid bound for the 13 bases above: 3317044064679887385961981.
const mpz_class& deterministic_bound() {
  static const mpz_class bound("3317044064679887385961981", 10);
  return bound;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const mpz_class& n, const mpz_class& a) {
  mpz_class d = n - 1;
  mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (mp_bitcnt_t i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned b : kDeterministicBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  for (unsigned b : kDeterministicBases)
    if (!strong_probable_prime(n, b)) return false;
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  for (unsigned b : kDeterministicBases)
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  if (n < deterministic_bound()) {
    for (unsigned b : kDeterministicBases)
      if (!strong_probable_prime(n, mpz_class(b))) return false;
    return true;
  }
  // Fixed seed keeps the verdict reproducible run to run.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  const mpz_class span = n - 3;
  for (int i = 0; i < kProbabilisticRounds; ++i) {
    mpz_class a = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

Prime::Prime(const mpz_class& p) : value_(p) {
  if (!is_prime(p)) fail(ErrorKind::invalid_modulus, p.get_str() + " is not prime");
  fits_word_ = mpz_sizeinbase(value_.get_mpz_t(), 2) <= 63;
}

Prime::Prime(std::uint64_t p) : Prime(mpz_class(static_cast<unsigned long>(p))) {}

Prime::Prime(TrustedTag, mpz_class p) : value_(std::move(p)) {
  fits_word_ = mpz_sizeinbase(value_.get_mpz_t(), 2) <= 63;
}

Prime Prime::trusted(std::uint64_t p) { return Prime(TrustedTag{}, mpz_class(static_cast<unsigned long>(p))); }
Prime Prime::trusted(const mpz_class& p) { return Prime(TrustedTag{}, p); }

std::uint64_t Prime::word() const {
  if (!fits_word_) fail(ErrorKind::invalid_argument, "prime does not fit the word kernel");
  return static_cast<std::uint64_t>(value_.get_ui());
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit) {
  lo = std::max<std::uint64_t>(lo, 2);
  if (hi < lo) return;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(hi))) + 1;

  std::vector<bool> small_composite(root + 1, false);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (small_composite[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small_composite[j] = true;
  }

  std::vector<char> composite(kSieveSegment);
  for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSieveSegment - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::uint64_t q : base) {
      if (q * q > seg_hi) break;
      std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
      for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = 1;
    }
    for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
      if (!composite[n - seg_lo]) visit(n);
    if (seg_hi == std::numeric_limits<std::uint64_t>::max()) break;
    seg_lo = seg_hi + 1;
  }
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

}  // namespace fdpi
