#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcmf {

struct PrimePower {
  std::uint64_t prime;
  std::uint64_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline constexpr std::size_t kDefaultDigitBudget = 1'000'000;

/// A positive integer held as its prime factorization.
///
/// Canonical form: strictly ascending primes, no zero exponents, so 1 is the
/// empty list and equality is structural. Every constructor establishes this;
/// the operations below rely on it. Values are immutable and cheap to share.
class FactoredNatural {
 public:
  /// The integer 1.
  FactoredNatural() = default;

  static FactoredNatural one() { return {}; }

  /// Factors n >= 1. Throws std::invalid_argument for n == 0.
  static FactoredNatural from_integer(std::uint64_t n);

  /// Builds from arbitrary (prime, exponent) pairs: sorts, merges repeated
  /// primes, drops zero exponents. Throws std::invalid_argument if any key
  /// with a nonzero exponent is not prime.
  static FactoredNatural from_factors(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  /// Exponent of p, or 0. Throws std::invalid_argument if p is not prime.
  std::uint64_t valuation(std::uint64_t p) const;

  /// Sum of e * log p in ascending prime order.
  double log_value() const;

  /// Exact decimal expansion. Throws DigitBudgetExceeded when the value has
  /// more than `digit_budget` digits.
  std::string to_decimal(std::size_t digit_budget = kDefaultDigitBudget) const;

  /// Upper bound on the number of decimal digits (exact up to rounding in the
  /// last place of log10).
  std::size_t estimated_digits() const;

  /// "2^3 * 3^2 * 5"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const FactoredNatural&, const FactoredNatural&) = default;

 private:
  explicit FactoredNatural(std::vector<PrimePower> canonical)
      : factors_(std::move(canonical)) {}

  friend class FactoredBuilder;
  std::vector<PrimePower> factors_;
};

FactoredNatural multiply(const FactoredNatural& a, const FactoredNatural& b);
FactoredNatural lcm(const FactoredNatural& a, const FactoredNatural& b);

/// a / b when b divides a; throws std::domain_error otherwise.
FactoredNatural divide_exact(const FactoredNatural& a, const FactoredNatural& b);

/// True iff a divides b.
bool divides(const FactoredNatural& a, const FactoredNatural& b);

inline std::uint64_t valuation(const FactoredNatural& a, std::uint64_t p) {
  return a.valuation(p);
}
inline double log_value(const FactoredNatural& a) { return a.log_value(); }
inline std::string to_decimal(const FactoredNatural& a,
                              std::size_t digit_budget = kDefaultDigitBudget) {
  return a.to_decimal(digit_budget);
}

/// Assembles a FactoredNatural from prime powers that the caller already knows
/// are prime and supplied in strictly ascending order (e.g. straight from a
/// sieve). Zero exponents are skipped. Order is checked; primality is not.
class FactoredBuilder {
 public:
  void reserve(std::size_t n) { factors_.reserve(n); }
  void push(std::uint64_t prime, std::uint64_t exponent);
  FactoredNatural build() &&;

 private:
  std::vector<PrimePower> factors_;
};

}  // namespace lcmf
