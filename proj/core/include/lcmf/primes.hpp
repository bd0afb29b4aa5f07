#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace lcmf {

/// Default bound for the shared sieve and the smallest-prime-factor table.
/// The environment variable LCMF_SIEVE_LIMIT overrides it.
inline constexpr std::uint64_t kDefaultSieveLimit = 10'000'000;

std::uint64_t default_sieve_limit();

/// Integer square root: the largest r with r*r <= n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// Calls `visit(p)` for every prime p in [lo, hi], in ascending order, using a
/// segmented sieve of Eratosthenes. Memory is O(sqrt(hi) + block_size).
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit,
                    std::size_t block_size = std::size_t{1} << 20);

/// Sieve-backed store of the primes up to `limit`.
///
/// Besides the primality bitmap it keeps the prime list, a running
/// ascending-order sum of log p per prime (so theta(x) is a lookup and is
/// bit-identical to the naive ascending summation), and the value of theta at
/// every sieve-block boundary. Immutable after construction.
class PrimeTable {
 public:
  static constexpr std::size_t kDefaultBlockSize = std::size_t{1} << 20;

  explicit PrimeTable(std::uint64_t limit,
                      std::size_t block_size = kDefaultBlockSize);

  std::uint64_t limit() const noexcept { return limit_; }
  std::size_t block_size() const noexcept { return block_size_; }

  /// Primality for n <= limit(); throws std::out_of_range above it.
  bool is_prime(std::uint64_t n) const;

  /// Every sieved prime, ascending.
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }

  /// Primes <= n (n clamped to limit()); a view into primes().
  std::span<const std::uint64_t> primes_through(std::uint64_t n) const;
  std::vector<std::uint64_t> primes_up_to(double x) const;

  std::uint64_t pi(double x) const;
  std::uint64_t pi_int(std::uint64_t n) const;
  double theta(double x) const;
  double theta_int(std::uint64_t n) const;

  /// log of the i-th prime (0-based), as std::log(double(p)).
  double log_prime(std::size_t index) const { return log_primes_[index]; }

  /// Sum of log p over the first `count` primes, summed in ascending order.
  double theta_prefix(std::size_t count) const { return theta_prefix_[count]; }

  /// theta(b) for b = block_size, 2*block_size, ... up to the end of the range.
  std::span<const double> block_checkpoints() const noexcept {
    return block_theta_;
  }

 private:
  std::uint64_t limit_;
  std::size_t block_size_;
  std::vector<std::uint64_t> bits_;         // bit n set iff n is prime
  std::vector<std::uint32_t> word_rank_;    // primes strictly below word i
  std::vector<std::uint64_t> primes_;
  std::vector<double> log_primes_;
  std::vector<double> theta_prefix_;        // size primes_.size() + 1
  std::vector<double> block_theta_;

  std::uint64_t clamp_floor(double x) const;
};

/// Process-wide table with limit >= `at_least`. Grows by doubling (or to
/// `at_least` when that is larger); earlier tables stay alive while referenced.
std::shared_ptr<const PrimeTable> shared_primes(std::uint64_t at_least = 0);

/// Primality for any 64-bit n: sieve lookup when the shared table covers n,
/// deterministic Miller-Rabin otherwise.
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(double x);
std::uint64_t pi(double x);
double theta(double x);

/// Sum of the base-b digits of n. Throws std::invalid_argument when b < 2.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base);

/// Exponent of p in n!, via Legendre's sum of floor(n / p^i). The base-p
/// digit identity (n - S_p(n)) / (p - 1) is evaluated too and must agree.
/// Throws std::invalid_argument when p is not prime.
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p);

/// Smallest-prime-factor table over [0, limit], used to factor small integers.
class FactorSieve {
 public:
  explicit FactorSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  /// Distinct prime factors of n with multiplicities, ascending primes.
  /// Requires 1 <= n <= limit().
  void factor(std::uint64_t n,
              std::vector<std::pair<std::uint64_t, std::uint32_t>>& out) const;

  /// All divisors of n (unordered). Requires 1 <= n <= limit().
  void divisors(std::uint64_t n, std::vector<std::uint64_t>& out) const;

  std::uint64_t smallest_factor(std::uint64_t n) const { return spf_[n]; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Shared smallest-prime-factor table with limit >= min(at_least, bound), grown
/// by doubling up to `bound` (default_sieve_limit()).
std::shared_ptr<const FactorSieve> shared_factor_sieve(std::uint64_t at_least);

/// Prime factorization of n >= 1 (ascending primes). Uses the shared
/// smallest-prime-factor table within its bound and trial division by sieved
/// primes beyond it. Throws std::invalid_argument when n == 0.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

}  // namespace lcmf
