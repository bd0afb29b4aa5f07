#include "lcmf/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "lcmf/primes.hpp"

namespace lcmf {

namespace {

constexpr double kUnitRoundoff = 0x1p-52;

}  // namespace

double tail_majorant(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("tail_majorant: x must be positive");
  double sum = 0.0;
  for (std::uint64_t m = x + 1; m <= 2 * x; ++m) {
    const double md = static_cast<double>(m);
    sum += std::log(md) / (md * md);
  }
  const double two_x = 2.0 * static_cast<double>(x);
  const double integral = (std::log(two_x) + 1.0) / two_x;
  const double t = 2.0 * (sum + integral);
  // Each term carries a few ulps of error and the sum about one per addition.
  return t * (1.0 + (static_cast<double>(x) + 8.0) * kUnitRoundoff);
}

Enclosure constant_c(double x) {
  if (!(x >= 100.0) || !std::isfinite(x)) {
    throw std::invalid_argument("constant_c: tail cut must be >= 100");
  }
  const auto cut = static_cast<std::uint64_t>(std::floor(x));
  double sum = 0.0;
  std::uint64_t count = 0;
  for_each_prime(2, cut, [&](std::uint64_t p) {
    const double pd = static_cast<double>(p);
    sum += std::log(pd) / (pd * (pd - 1.0));
    ++count;
  });
  const double pad = (static_cast<double>(count) + 8.0) * kUnitRoundoff * sum;
  return {sum - pad, sum + pad + tail_majorant(cut)};
}

const Enclosure& reference_constant() {
  static const Enclosure c = constant_c(static_cast<double>(kReferenceTailCut));
  return c;
}

double theta_sum_rho(std::uint64_t n) {
  const auto table = shared_primes(n);
  double sum = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) sum += table->theta_int(n / k);
  return sum;
}

double theta_sum_sigma(std::uint64_t n) {
  const auto table = shared_primes(n + 1);
  double sum = 0.0;
  for (std::uint64_t k = 1; k <= n; ++k) sum += table->theta_int(n / k + 1);
  return sum;
}

SSplit s_split(std::uint64_t n) {
  const auto table = shared_primes(n + 1);
  const std::uint64_t r = isqrt(n);
  SSplit out;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t v = n / k + 1;
    if (!table->is_prime(v)) continue;
    (k <= r ? out.s1 : out.s2) += std::log(static_cast<double>(v));
  }
  out.total = out.s1 + out.s2;
  return out;
}

double s2_by_counting(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  const auto table = shared_primes(r + 1);
  double sum = 0.0;
  for (const std::uint64_t p : table->primes_through(r + 1)) {
    const std::uint64_t hi = std::min(n, n / (p - 1));
    const std::uint64_t lo = std::max(r, n / p);
    if (hi > lo) sum += static_cast<double>(hi - lo) * std::log(static_cast<double>(p));
  }
  return sum;
}

std::uint64_t card_a(std::uint64_t n) {
  const auto table = shared_primes(n + 1);
  std::uint64_t count = 0;
  for (std::uint64_t k = 1, r = isqrt(n); k <= r; ++k) count += table->is_prime(n / k + 1);
  return count;
}

double higher_power_sum(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  const auto table = shared_primes(r);
  double sum = 0.0;
  for (const std::uint64_t p : table->primes_through(r)) {
    std::uint64_t e = 0;
    for (std::uint64_t q = n / p / p; q; q /= p) e += q;
    sum += static_cast<double>(e) * std::log(static_cast<double>(p));
  }
  return sum;
}

double prop10_residual(std::uint64_t n, double c) {
  return higher_power_sum(n) - c * static_cast<double>(n);
}

double log_factorial(std::uint64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace lcmf
