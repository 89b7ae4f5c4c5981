#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace fdpi {

/// Miller-Rabin: deterministic (bases 2..41) below 3.3e24, 64 seeded rounds above.
bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

/// A modulus known to be prime. Construction runs the primality test unless
/// the value comes from a trusted source such as the sieve.
class Prime {
 public:
  explicit Prime(const mpz_class& p);
  explicit Prime(std::uint64_t p);

  static Prime trusted(std::uint64_t p);
  static Prime trusted(const mpz_class& p);

  const mpz_class& value() const noexcept { return value_; }

  /// True when the prime admits the 64-bit arithmetic kernel (p < 2^63).
  bool fits_word() const noexcept { return fits_word_; }
  std::uint64_t word() const;

  friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }

 private:
  struct TrustedTag {};
  Prime(TrustedTag, mpz_class p);

  mpz_class value_;
  bool fits_word_ = false;
};

inline constexpr std::uint64_t kSieveSegment = std::uint64_t{1} << 20;

/// Calls `visit(p)` for every prime lo <= p <= hi in ascending order using a
/// segmented sieve of Eratosthenes.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit);

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  return primes_between(2, bound);
}

}  // namespace fdpi
