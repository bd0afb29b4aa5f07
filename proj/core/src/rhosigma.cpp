#include "lcmf/rhosigma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lcmf/primes.hpp"

namespace lcmf {

FactoredNatural rho(std::uint64_t n) {
  FactoredBuilder b;
  for (const std::uint64_t p : shared_primes(n)->primes_through(n)) b.push(p, n / p);
  return std::move(b).build();
}

FactoredNatural sigma(std::uint64_t n) {
  FactoredBuilder b;
  for (const std::uint64_t p : shared_primes(n + 1)->primes_through(n + 1)) {
    b.push(p, n / (p - 1));
  }
  return std::move(b).build();
}

FactoredNatural factorial(std::uint64_t n) {
  FactoredBuilder b;
  for (const std::uint64_t p : shared_primes(n)->primes_through(n)) {
    std::uint64_t e = 0;
    for (std::uint64_t q = n / p; q; q /= p) e += q;
    b.push(p, e);
  }
  return std::move(b).build();
}

FactoredNatural lcm_upto(std::uint64_t n) {
  FactoredBuilder b;
  for (const std::uint64_t p : shared_primes(n)->primes_through(n)) {
    std::uint64_t e = 0;
    for (std::uint64_t pk = p; pk <= n; pk = pk > n / p ? n + 1 : pk * p) ++e;
    b.push(p, e);
  }
  return std::move(b).build();
}

namespace {

void divisors_of(std::uint64_t n, const FactorSieve& sieve, std::vector<std::uint64_t>& out) {
  if (n <= sieve.limit()) {
    sieve.divisors(n, out);
    return;
  }
  out.assign(1, 1);
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
}

}  // namespace

DeltaStream::DeltaStream(Sequence seq, std::uint64_t nmax, std::uint64_t start)
    : seq_(seq), nmax_(nmax), n_(start) {}

bool DeltaStream::next(StreamStep& step) {
  if (n_ >= nmax_) return false;
  ++n_;
  step.n = n_;
  step.incremented.clear();
  if (seq_ == Sequence::Rho) {
    for (auto [p, e] : factorize(n_)) step.incremented.push_back(p);
    return true;
  }
  const auto sieve = shared_factor_sieve(nmax_);
  const auto primes = shared_primes(nmax_ + 1);
  divisors_of(n_, *sieve, divisors_);
  std::sort(divisors_.begin(), divisors_.end());
  for (const std::uint64_t d : divisors_) {
    if (primes->is_prime(d + 1)) step.incremented.push_back(d + 1);
  }
  return true;
}

StreamAccumulator::StreamAccumulator(const FactoredNatural& seed, std::uint64_t n) : n_(n) {
  for (const auto& f : seed.factors()) {
    if (f.prime >= exponent_.size()) exponent_.resize(f.prime + 1, 0);
    exponent_[f.prime] = f.exponent;
  }
}

void StreamAccumulator::apply(const StreamStep& step) {
  if (step.n != n_ + 1) throw std::invalid_argument("StreamAccumulator: steps must be consecutive");
  for (const std::uint64_t p : step.incremented) {
    if (p >= exponent_.size()) exponent_.resize(std::max<std::size_t>(p + 1, 2 * exponent_.size()), 0);
    ++exponent_[p];
  }
  n_ = step.n;
}

FactoredNatural StreamAccumulator::snapshot() const {
  FactoredBuilder b;
  for (std::size_t p = 2; p < exponent_.size(); ++p) b.push(p, exponent_[p]);
  return std::move(b).build();
}

DivisibilityReport check_prop2(std::uint64_t n) {
  const auto rn = rho(n);
  const auto sn = sigma(n);
  const auto fn = factorial(n);
  DivisibilityReport r;
  r.item_i = divides(rn, rho(n + 1)) && divides(sn, sigma(n + 1)) && divides(rn, sn);
  r.item_ii = divides(rn, fn);
  r.item_iii = divides(fn, sn) && divides(sn, factorial(2 * n));
  r.item_iv = (n % 2 == 0) || sn == multiply(sigma(n - 1), FactoredNatural::from_integer(2));
  return r;
}

FactorialBoundsReport check_prop3(std::uint64_t n) {
  FactorialBoundsReport r{true, true};
  const std::uint64_t top = n + 1;
  for (const std::uint64_t p : shared_primes(top)->primes_through(top)) {
    std::uint64_t lower = 0;
    std::uint64_t upper = 0;
    std::uint64_t e = 0;
    for (std::uint64_t pk = p; pk <= top; pk = pk > top / p ? top + 1 : pk * p) {
      ++e;
      lower += top / pk;
      upper += n / pk;
    }
    upper += e;
    const std::uint64_t mid = n / (p - 1);
    r.lower = r.lower && lower <= mid;
    r.upper = r.upper && mid <= upper;
  }
  return r;
}

FactorialBoundsReport check_prop3_factored(std::uint64_t n) {
  const auto sn = sigma(n);
  return {divides(factorial(n + 1), sn), divides(sn, multiply(factorial(n), lcm_upto(n + 1)))};
}

std::uint64_t valuation_by_digits(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("valuation_by_digits: p must be >= 2");
  return digit_sum(n, p) / (p - 1);
}

std::uint64_t special_k_max(std::uint64_t n, SpecialVariant variant) {
  // (k - 1)^2 < n + 1  <=>  k - 1 <= isqrt(n)
  return variant == SpecialVariant::A ? isqrt(n) : isqrt(n) + 1;
}

std::optional<std::uint64_t> find_witness(std::uint64_t n, std::uint64_t p) {
  const std::uint64_t kmax = special_k_max(n, SpecialVariant::APrime);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    if ((n + k) / k == p) return k;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> large_primes(std::uint64_t n) {
  const auto table = shared_primes(n + 1);
  const auto all = table->primes_through(n + 1);
  std::vector<std::uint64_t> out;
  for (const std::uint64_t p : all) {
    if (p * p > n + 1) out.push_back(p);
  }
  return out;
}

ValuationRecord theorem2_valuation(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("theorem2_valuation: " + std::to_string(p) + " is not prime");
  }
  if (p > n + 1 || p * p <= n + 1) {
    throw std::invalid_argument("theorem2_valuation: p=" + std::to_string(p) +
                                " is outside (sqrt(n+1), n+1] for n=" + std::to_string(n));
  }
  ValuationRecord rec{n, p, valuation_by_digits(n, p), find_witness(n, p)};
  if (rec.v > 1 || (rec.v == 1) != rec.witness_k.has_value()) {
    throw std::logic_error("theorem2_valuation: digit and witness routes disagree at n=" +
                           std::to_string(n) + ", p=" + std::to_string(p));
  }
  return rec;
}

std::string valuation_csv_header() { return "n,p,v,witness_k"; }

std::string to_csv_row(const ValuationRecord& r) {
  std::string row = std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.v) + ",";
  if (r.witness_k) row += std::to_string(*r.witness_k);
  return row;
}

SpecialPrimeSet special_primes(std::uint64_t n, SpecialVariant variant) {
  if (n == 0) throw std::invalid_argument("special_primes: n must be >= 1");
  SpecialPrimeSet s;
  s.n = n;
  s.variant = variant;
  const auto table = shared_primes(n + 1);
  const std::uint64_t kmax = special_k_max(n, variant);
  std::uint64_t previous = 0;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    const std::uint64_t v = (n + k) / k;
    // floor(n/k + 1) is nonincreasing in k, so equal values are adjacent.
    if (k > 1 && v == previous) s.distinct_values = false;
    previous = v;
    if (!table->is_prime(v)) continue;
    ++s.qualifying_k;
    if (s.generating_k.empty() || s.generating_k.back().first != v) s.generating_k.emplace_back(v, k);
  }
  std::reverse(s.generating_k.begin(), s.generating_k.end());
  for (const auto& [p, k] : s.generating_k) s.members.push_back(p);
  return s;
}

FactoredNatural sigma_over_factorial(std::uint64_t n) {
  return divide_exact(sigma(n), factorial(n));
}

Decomposition decomposition_check(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("decomposition_check: n must be >= 1");
  const auto whole = sigma_over_factorial(n);
  Decomposition out;
  out.n = n;
  FactoredBuilder small;
  FactoredBuilder large;
  for (const auto& f : whole.factors()) {
    if (f.prime * f.prime <= n + 1) {
      small.push(f.prime, f.exponent);
      out.small_part_log += static_cast<double>(f.exponent) * std::log(static_cast<double>(f.prime));
    } else {
      large.push(f.prime, f.exponent);
    }
  }
  out.small_part = std::move(small).build();
  out.large_part = std::move(large).build();
  FactoredBuilder a_prime;
  for (const std::uint64_t p : special_primes(n, SpecialVariant::APrime).members) {
    if (p * p > n + 1) a_prime.push(p, 1);
  }
  out.a_prime_product = std::move(a_prime).build();
  out.matches = out.large_part == out.a_prime_product &&
                multiply(out.small_part, out.large_part) == whole;
  return out;
}

double small_part_log(std::uint64_t n) {
  const auto table = shared_primes(isqrt(n + 1) + 1);
  double sum = 0.0;
  for (const std::uint64_t p : table->primes_through(isqrt(n + 1))) {
    std::uint64_t fact = 0;
    for (std::uint64_t q = n / p; q; q /= p) fact += q;
    const std::uint64_t e = n / (p - 1) - fact;
    sum += static_cast<double>(e) * std::log(static_cast<double>(p));
  }
  return sum;
}

}  // namespace lcmf
