#include "lcmf/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lcmf {

std::uint64_t default_sieve_limit() {
  if (const char* env = std::getenv("LCMF_SIEVE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 100) return v;
  }
  return kDefaultSieveLimit;
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (r > 0xFFFFFFFFull || r * r > n)) --r;
  while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

std::vector<std::uint64_t> small_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

// Sieves [lo, hi] block by block and hands each block's flag array to `emit`.
template <typename Emit>
void sieve_segments(std::uint64_t lo, std::uint64_t hi, std::size_t block,
                    Emit&& emit) {
  if (hi < 2 || lo > hi) return;
  const auto base = small_primes(isqrt(hi));
  std::vector<std::uint8_t> flags(block);
  for (std::uint64_t start = lo; start <= hi; start += block) {
    const std::uint64_t end = std::min<std::uint64_t>(hi, start + block - 1);
    const std::size_t len = static_cast<std::size_t>(end - start + 1);
    std::fill_n(flags.begin(), len, std::uint8_t{1});
    for (std::uint64_t n = start; n < 2 && n <= end; ++n) flags[n - start] = 0;
    for (const std::uint64_t p : base) {
      if (p * p > end) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t m = first; m <= end; m += p) flags[m - start] = 0;
    }
    emit(start, end, flags.data());
    if (end == hi) break;
  }
}

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& visit,
                    std::size_t block_size) {
  if (block_size == 0) throw std::invalid_argument("block_size must be positive");
  sieve_segments(lo, hi, block_size,
                 [&](std::uint64_t start, std::uint64_t end, const std::uint8_t* flags) {
                   for (std::uint64_t n = start; n <= end; ++n) {
                     if (flags[n - start]) visit(n);
                   }
                 });
}

PrimeTable::PrimeTable(std::uint64_t limit, std::size_t block_size)
    : limit_(limit), block_size_(block_size) {
  if (block_size_ == 0) throw std::invalid_argument("block_size must be positive");
  const std::size_t words = static_cast<std::size_t>(limit_ / 64 + 1);
  bits_.assign(words, 0);
  double running = 0.0;
  theta_prefix_.push_back(0.0);
  sieve_segments(0, limit_, block_size_,
                 [&](std::uint64_t start, std::uint64_t end, const std::uint8_t* flags) {
                   for (std::uint64_t n = start; n <= end; ++n) {
                     if (!flags[n - start]) continue;
                     bits_[n / 64] |= std::uint64_t{1} << (n % 64);
                     primes_.push_back(n);
                     const double lp = std::log(static_cast<double>(n));
                     log_primes_.push_back(lp);
                     running += lp;
                     theta_prefix_.push_back(running);
                   }
                   block_theta_.push_back(running);
                 });
  if (limit_ < 2) block_theta_.assign(1, 0.0);
  word_rank_.resize(words);
  std::uint32_t rank = 0;
  for (std::size_t i = 0; i < words; ++i) {
    word_rank_[i] = rank;
    rank += static_cast<std::uint32_t>(std::popcount(bits_[i]));
  }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) {
    throw std::out_of_range("PrimeTable::is_prime: " + std::to_string(n) +
                            " exceeds limit " + std::to_string(limit_));
  }
  return (bits_[n / 64] >> (n % 64)) & 1u;
}

std::uint64_t PrimeTable::clamp_floor(double x) const {
  if (!(x >= 2.0)) return 0;
  const double f = std::floor(x);
  if (f > static_cast<double>(limit_)) {
    throw std::out_of_range("PrimeTable: argument exceeds sieve limit " +
                            std::to_string(limit_));
  }
  return static_cast<std::uint64_t>(f);
}

std::uint64_t PrimeTable::pi_int(std::uint64_t n) const {
  if (n > limit_) {
    throw std::out_of_range("PrimeTable::pi: " + std::to_string(n) +
                            " exceeds limit " + std::to_string(limit_));
  }
  const std::size_t w = static_cast<std::size_t>(n / 64);
  const unsigned bit = static_cast<unsigned>(n % 64);
  const std::uint64_t mask = bit == 63 ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << (bit + 1)) - 1);
  return word_rank_[w] + static_cast<std::uint64_t>(std::popcount(bits_[w] & mask));
}

std::uint64_t PrimeTable::pi(double x) const { return pi_int(clamp_floor(x)); }

double PrimeTable::theta_int(std::uint64_t n) const {
  return theta_prefix_[static_cast<std::size_t>(pi_int(n))];
}

double PrimeTable::theta(double x) const { return theta_int(clamp_floor(x)); }

std::span<const std::uint64_t> PrimeTable::primes_through(std::uint64_t n) const {
  const std::uint64_t count = pi_int(std::min(n, limit_));
  return std::span<const std::uint64_t>(primes_).first(static_cast<std::size_t>(count));
}

std::vector<std::uint64_t> PrimeTable::primes_up_to(double x) const {
  const auto view = primes_through(clamp_floor(x));
  return {view.begin(), view.end()};
}

namespace {

std::mutex g_primes_mutex;
std::shared_ptr<const PrimeTable> g_primes;

std::mutex g_spf_mutex;
std::shared_ptr<const FactorSieve> g_spf;

}  // namespace

std::shared_ptr<const PrimeTable> shared_primes(std::uint64_t at_least) {
  std::lock_guard lock(g_primes_mutex);
  if (!g_primes || g_primes->limit() < at_least) {
    std::uint64_t limit = std::max<std::uint64_t>(at_least, std::uint64_t{1} << 16);
    if (g_primes) limit = std::max(limit, 2 * g_primes->limit());
    g_primes = std::make_shared<const PrimeTable>(limit);
  }
  return g_primes;
}

bool is_prime(std::uint64_t n) {
  {
    std::lock_guard lock(g_primes_mutex);
    if (g_primes && n <= g_primes->limit()) return g_primes->is_prime(n);
  }
  if (n <= (std::uint64_t{1} << 16)) return shared_primes(n)->is_prime(n);
  return miller_rabin(n);
}

std::vector<std::uint64_t> primes_up_to(double x) {
  if (!(x >= 2.0)) return {};
  return shared_primes(static_cast<std::uint64_t>(std::floor(x)))->primes_up_to(x);
}

std::uint64_t pi(double x) {
  if (!(x >= 2.0)) return 0;
  return shared_primes(static_cast<std::uint64_t>(std::floor(x)))->pi(x);
}

double theta(double x) {
  if (!(x >= 2.0)) return 0.0;
  return shared_primes(static_cast<std::uint64_t>(std::floor(x)))->theta(x);
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("digit_sum: base must be >= 2");
  std::uint64_t s = 0;
  while (n) {
    s += n % base;
    n /= base;
  }
  return s;
}

std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("factorial_valuation: " + std::to_string(p) +
                                " is not prime");
  }
  std::uint64_t legendre = 0;
  for (std::uint64_t q = n / p; q; q /= p) legendre += q;
  const std::uint64_t by_digits = (n - digit_sum(n, p)) / (p - 1);
  if (legendre != by_digits) {
    throw std::logic_error("factorial_valuation: Legendre and digit routes disagree");
  }
  return legendre;
}

FactorSieve::FactorSieve(std::uint64_t limit) : limit_(limit) {
  if (limit_ > 0xFFFFFFFFull) throw std::invalid_argument("FactorSieve limit too large");
  spf_.assign(static_cast<std::size_t>(limit_ + 1), 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit_) break;
      spf_[i * p] = p;
    }
  }
  if (limit_ >= 1) spf_[1] = 1;
}

void FactorSieve::factor(std::uint64_t n,
                         std::vector<std::pair<std::uint64_t, std::uint32_t>>& out) const {
  out.clear();
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.emplace_back(p, e);
  }
}

void FactorSieve::divisors(std::uint64_t n, std::vector<std::uint64_t>& out) const {
  out.clear();
  out.push_back(1);
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
}

std::shared_ptr<const FactorSieve> shared_factor_sieve(std::uint64_t at_least) {
  const std::uint64_t bound = default_sieve_limit();
  std::lock_guard lock(g_spf_mutex);
  const std::uint64_t want = std::min(at_least, bound);
  if (!g_spf || g_spf->limit() < want) {
    std::uint64_t limit = std::max<std::uint64_t>(want, std::uint64_t{1} << 16);
    if (g_spf) limit = std::max(limit, 2 * g_spf->limit());
    g_spf = std::make_shared<const FactorSieve>(std::min(limit, std::max(bound, want)));
  }
  return g_spf;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: 0 has no factorization");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> result;
  const auto sieve = shared_factor_sieve(n);
  if (n <= sieve->limit()) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> tmp;
    sieve->factor(n, tmp);
    for (auto [p, e] : tmp) result.emplace_back(p, e);
    return result;
  }
  const std::uint64_t bound = sieve->limit();
  const auto table = shared_primes(std::min(isqrt(n), bound));
  std::uint64_t r = n;
  auto strip = [&](std::uint64_t p) {
    if (r % p) return;
    std::uint64_t e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    result.emplace_back(p, e);
  };
  std::uint64_t last = 1;
  for (const std::uint64_t p : table->primes()) {
    if (p > r / p) break;
    strip(p);
    last = p;
  }
  if (r > 1 && !miller_rabin(r)) {
    // Cofactor has no factor below the table; continue with odd trial divisors.
    for (std::uint64_t d = std::max<std::uint64_t>(3, last + 2) | 1; d <= r / d; d += 2) strip(d);
  }
  if (r > 1) result.emplace_back(r, 1);
  return result;
}

}  // namespace lcmf
