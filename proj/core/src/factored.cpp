#include "lcmf/factored.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcmf/errors.hpp"
#include "lcmf/primes.hpp"

namespace lcmf {

FactoredNatural FactoredNatural::from_integer(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("from_integer: 0 is not a positive integer");
  std::vector<PrimePower> out;
  for (auto [p, e] : factorize(n)) out.push_back({p, e});
  return FactoredNatural(std::move(out));
}

FactoredNatural FactoredNatural::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  std::vector<PrimePower> out;
  out.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!out.empty() && out.back().prime == f.prime) {
      out.back().exponent += f.exponent;
      continue;
    }
    if (!is_prime(f.prime)) {
      throw std::invalid_argument("from_factors: " + std::to_string(f.prime) +
                                  " is not prime");
    }
    out.push_back(f);
  }
  return FactoredNatural(std::move(out));
}

std::uint64_t FactoredNatural::valuation(std::uint64_t p) const {
  if (!is_prime(p)) {
    throw std::invalid_argument("valuation: " + std::to_string(p) + " is not prime");
  }
  const auto it = std::lower_bound(
      factors_.begin(), factors_.end(), p,
      [](const PrimePower& f, std::uint64_t q) { return f.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

double FactoredNatural::log_value() const {
  double sum = 0.0;
  for (const auto& f : factors_) {
    sum += static_cast<double>(f.exponent) * std::log(static_cast<double>(f.prime));
  }
  return sum;
}

std::size_t FactoredNatural::estimated_digits() const {
  long double digits = 0.0L;
  for (const auto& f : factors_) {
    digits += static_cast<long double>(f.exponent) *
              std::log10(static_cast<long double>(f.prime));
  }
  return static_cast<std::size_t>(std::floor(digits * (1.0L + 1e-15L))) + 1;
}

std::string FactoredNatural::to_decimal(std::size_t digit_budget) const {
  const std::size_t digits = estimated_digits();
  if (digits > digit_budget) {
    throw DigitBudgetExceeded("to_decimal: value has about " + std::to_string(digits) +
                              " digits, over the budget of " +
                              std::to_string(digit_budget));
  }
  std::vector<mpz_class> level;
  level.reserve(factors_.size());
  for (const auto& f : factors_) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(f.prime),
                  static_cast<unsigned long>(f.exponent));
    level.push_back(std::move(v));
  }
  if (level.empty()) return "1";
  while (level.size() > 1) {
    std::vector<mpz_class> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front().get_str(10);
}

std::string FactoredNatural::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(f.prime);
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

namespace {

template <typename Combine>
std::vector<PrimePower> merge(std::span<const PrimePower> a, std::span<const PrimePower> b,
                              Combine combine) {
  std::vector<PrimePower> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].prime < a[i].prime) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].prime, combine(a[i].exponent, b[j].exponent)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FactoredNatural multiply(const FactoredNatural& a, const FactoredNatural& b) {
  FactoredBuilder builder;
  for (const auto& f : merge(a.factors(), b.factors(),
                             [](std::uint64_t x, std::uint64_t y) { return x + y; })) {
    builder.push(f.prime, f.exponent);
  }
  return std::move(builder).build();
}

FactoredNatural lcm(const FactoredNatural& a, const FactoredNatural& b) {
  FactoredBuilder builder;
  for (const auto& f : merge(a.factors(), b.factors(),
                             [](std::uint64_t x, std::uint64_t y) { return std::max(x, y); })) {
    builder.push(f.prime, f.exponent);
  }
  return std::move(builder).build();
}

bool divides(const FactoredNatural& a, const FactoredNatural& b) {
  const auto fb = b.factors();
  std::size_t j = 0;
  for (const auto& f : a.factors()) {
    while (j < fb.size() && fb[j].prime < f.prime) ++j;
    if (j == fb.size() || fb[j].prime != f.prime || fb[j].exponent < f.exponent) return false;
  }
  return true;
}

FactoredNatural divide_exact(const FactoredNatural& a, const FactoredNatural& b) {
  if (!divides(b, a)) throw std::domain_error("divide_exact: divisor does not divide");
  const auto fb = b.factors();
  FactoredBuilder builder;
  std::size_t j = 0;
  for (const auto& f : a.factors()) {
    std::uint64_t e = f.exponent;
    if (j < fb.size() && fb[j].prime == f.prime) e -= fb[j++].exponent;
    builder.push(f.prime, e);
  }
  return std::move(builder).build();
}

void FactoredBuilder::push(std::uint64_t prime, std::uint64_t exponent) {
  if (exponent == 0) return;
  if (!factors_.empty() && factors_.back().prime >= prime) {
    throw std::invalid_argument("FactoredBuilder: primes must be strictly ascending");
  }
  factors_.push_back({prime, exponent});
}

FactoredNatural FactoredBuilder::build() && {
  return FactoredNatural(std::move(factors_));
}

}  // namespace lcmf
