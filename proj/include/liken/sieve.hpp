#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace liken {

/// Segmented sieve of Eratosthenes that grows on demand. Primes come out in
/// increasing order; each extension sieves one new segment with the base
/// primes already found.
class IncrementalSieve {
 public:
  IncrementalSieve();

  /// The i-th prime, 0-based (prime(0) == 2).
  std::uint64_t prime(std::size_t i);
  /// pi(n): number of primes <= n.
  std::size_t count_up_to(std::uint64_t n);
  /// Guarantees every prime <= n is in primes().
  void extend_to(std::uint64_t n);
  bool is_prime(std::uint64_t n);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

 private:
  void extend_segment();

  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_below_ = 0;  // all primes < sieved_below_ are known
};

/// Prime factorization by trial division, ascending primes. n >= 1.
/// Throws InvalidArgument when a cofactor is too large to split at desk scale.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

}  // namespace liken
