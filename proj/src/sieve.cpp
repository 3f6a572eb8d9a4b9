#include "liken/sieve.hpp"

#include <algorithm>

#include "liken/error.hpp"

namespace liken {

namespace {
constexpr std::uint64_t kFirstSegment = 1u << 16;
constexpr std::uint64_t kSegmentSpan = 1u << 20;
constexpr unsigned long kTrialLimit = 50'000'000;  // largest trial divisor used by factorize
}  // namespace

IncrementalSieve::IncrementalSieve() {
  std::vector<bool> composite(kFirstSegment, false);
  for (std::uint64_t i = 2; i < kFirstSegment; ++i) {
    if (composite[i]) continue;
    primes_.push_back(i);
    for (std::uint64_t j = i * i; j < kFirstSegment; j += i) composite[j] = true;
  }
  sieved_below_ = kFirstSegment;
}

void IncrementalSieve::extend_segment() {
  const std::uint64_t lo = sieved_below_;
  const std::uint64_t hi = lo + std::min(lo, kSegmentSpan);  // hi <= lo^2, so base primes are known
  std::vector<bool> composite(hi - lo, false);
  for (const std::uint64_t p : primes_) {
    if (p * p >= hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = true;
  }
  for (std::uint64_t i = 0; i < hi - lo; ++i) {
    if (!composite[i]) primes_.push_back(lo + i);
  }
  sieved_below_ = hi;
}

void IncrementalSieve::extend_to(std::uint64_t n) {
  while (sieved_below_ <= n) extend_segment();
}

std::uint64_t IncrementalSieve::prime(std::size_t i) {
  while (primes_.size() <= i) extend_segment();
  return primes_[i];
}

std::size_t IncrementalSieve::count_up_to(std::uint64_t n) {
  extend_to(n);
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), n) - primes_.begin());
}

bool IncrementalSieve::is_prime(std::uint64_t n) {
  extend_to(n);
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factorize needs n >= 1");
  std::vector<std::pair<mpz_class, unsigned>> out;
  mpz_class rest = n;
  auto take = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  for (unsigned long d = 3; rest > 1; d += 2) {
    const mpz_class dz(d);
    if (dz * dz > rest) {
      out.emplace_back(rest, 1);
      break;
    }
    if (d > kTrialLimit) {
      if (mpz_probab_prime_p(rest.get_mpz_t(), 40) > 0) {
        out.emplace_back(rest, 1);
        break;
      }
      throw Error(ErrorCode::InvalidArgument, "integer too large to factor: " + n.get_str());
    }
    take(dz);
  }
  return out;
}

}  // namespace liken
