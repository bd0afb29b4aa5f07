#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcmf/factored.hpp"

namespace lcmf {

/// rho_n = prod_p p^floor(n/p).
FactoredNatural rho(std::uint64_t n);
/// sigma_n = prod_p p^floor(n/(p-1)).
FactoredNatural sigma(std::uint64_t n);
/// n! via Legendre's formula.
FactoredNatural factorial(std::uint64_t n);
/// lcm(1, 2, ..., n); 1 for n = 0.
FactoredNatural lcm_upto(std::uint64_t n);

enum class Sequence { Rho, Sigma };

inline constexpr std::uint64_t kDefaultCheckpointInterval = std::uint64_t{1} << 16;

/// One step of a sequence stream: value(n) = value(n - 1) * prod(incremented).
/// Each listed prime's exponent goes up by exactly one.
struct StreamStep {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> incremented;
};

/// Exponent deltas of rho or sigma. From n - 1 to n the exponent of p grows
/// (by one) iff p | n for rho and iff (p - 1) | n for sigma; nothing else
/// changes. Deltas depend only on n, so a stream can start anywhere.
class DeltaStream {
 public:
  /// Yields steps n = start + 1, ..., nmax.
  DeltaStream(Sequence seq, std::uint64_t nmax, std::uint64_t start = 0);

  /// Fills `step` and returns true, or returns false past nmax.
  bool next(StreamStep& step);

  std::uint64_t position() const noexcept { return n_; }

 private:
  Sequence seq_;
  std::uint64_t nmax_;
  std::uint64_t n_;
  std::vector<std::uint64_t> divisors_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors_;
};

inline DeltaStream rho_stream(std::uint64_t nmax) { return DeltaStream(Sequence::Rho, nmax); }
inline DeltaStream sigma_stream(std::uint64_t nmax) { return DeltaStream(Sequence::Sigma, nmax); }

/// Dense exponent vector fed by stream steps; snapshot() gives the running value.
class StreamAccumulator {
 public:
  StreamAccumulator() = default;
  /// Seeds with the value at `n`, e.g. a checkpoint snapshot.
  StreamAccumulator(const FactoredNatural& seed, std::uint64_t n);

  void apply(const StreamStep& step);
  std::uint64_t position() const noexcept { return n_; }
  FactoredNatural snapshot() const;

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> exponent_;  // indexed by the prime itself
};

/// Divisibility facts at n checked by check_prop2:
///   (i)   rho_n | rho_{n+1}, sigma_n | sigma_{n+1}, rho_n | sigma_n
///   (ii)  rho_n | n!
///   (iii) n! | sigma_n and sigma_n | (2n)!
///   (iv)  for odd n = 2m + 1, sigma_n = 2 sigma_{2m} (vacuous for even n)
struct DivisibilityReport {
  bool item_i = false;
  bool item_ii = false;
  bool item_iii = false;
  bool item_iv = false;

  bool all() const noexcept { return item_i && item_ii && item_iii && item_iv; }
};
DivisibilityReport check_prop2(std::uint64_t n);

/// (n+1)! | sigma_n and sigma_n | n! lcm(1..n+1), checked prime by prime as
///   sum_{i<=e} floor((n+1)/p^i) <= floor(n/(p-1)) <= sum_{i<=e} floor(n/p^i) + e
/// with e the largest exponent such that p^e <= n + 1.
struct FactorialBoundsReport {
  bool lower = false;
  bool upper = false;

  bool all() const noexcept { return lower && upper; }
};
FactorialBoundsReport check_prop3(std::uint64_t n);

/// Same two divisibilities, evaluated on full factored values instead.
FactorialBoundsReport check_prop3_factored(std::uint64_t n);

/// v_p(sigma_n / n!) for a prime p with sqrt(n+1) < p <= n+1.
struct ValuationRecord {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t v = 0;
  std::optional<std::uint64_t> witness_k;

  friend bool operator==(const ValuationRecord&, const ValuationRecord&) = default;
};

/// floor(S_p(n) / (p - 1)).
std::uint64_t valuation_by_digits(std::uint64_t n, std::uint64_t p);

/// Smallest k >= 1 with (k - 1)^2 < n + 1 and floor(n/k + 1) == p, if any.
std::optional<std::uint64_t> find_witness(std::uint64_t n, std::uint64_t p);

/// Primes p with p^2 > n + 1 and p <= n + 1, ascending.
std::vector<std::uint64_t> large_primes(std::uint64_t n);

/// Computes the valuation by the digit route and the witness route and
/// requires them to agree (std::logic_error otherwise). Throws
/// std::invalid_argument when p is composite or outside (sqrt(n+1), n+1].
ValuationRecord theorem2_valuation(std::uint64_t n, std::uint64_t p);

std::string valuation_csv_header();
std::string to_csv_row(const ValuationRecord& r);

enum class SpecialVariant {
  A,       // k <= sqrt(n)
  APrime,  // k < sqrt(n+1) + 1
};

/// Primes of the form floor(n/k + 1) over the variant's k-range.
struct SpecialPrimeSet {
  std::uint64_t n = 0;
  SpecialVariant variant = SpecialVariant::A;
  std::vector<std::uint64_t> members;  // ascending
  std::vector<std::pair<std::uint64_t, std::uint64_t>> generating_k;  // (prime, k), ascending prime
  std::uint64_t qualifying_k = 0;  // number of k in range giving a prime
  bool distinct_values = true;     // floor(n/k + 1) pairwise distinct over the range

  std::uint64_t card() const noexcept { return members.size(); }
};

/// Requires n >= 1.
SpecialPrimeSet special_primes(std::uint64_t n, SpecialVariant variant);

/// Upper end of the variant's k-range.
std::uint64_t special_k_max(std::uint64_t n, SpecialVariant variant);

/// sigma_n / n! split at sqrt(n + 1).
struct Decomposition {
  std::uint64_t n = 0;
  FactoredNatural small_part;   // primes p with p^2 <= n + 1
  double small_part_log = 0.0;
  FactoredNatural large_part;   // primes p with p^2 > n + 1
  FactoredNatural a_prime_product;  // product of members of A'_n with p^2 > n + 1
  bool matches = false;         // large_part == a_prime_product and the parts multiply back

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

FactoredNatural sigma_over_factorial(std::uint64_t n);

/// Requires n >= 1.
Decomposition decomposition_check(std::uint64_t n);

/// log of the small part alone, in O(pi(sqrt(n))) time.
double small_part_log(std::uint64_t n);

}  // namespace lcmf
