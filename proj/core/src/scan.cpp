#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "lcmf/analytics.hpp"
#include "lcmf/primes.hpp"

namespace lcmf {

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

double log_of(std::uint64_t v) { return std::log(static_cast<double>(v)); }

}  // namespace

ScanGrid ScanGrid::arithmetic(std::uint64_t first, std::uint64_t last, std::uint64_t step) {
  if (first == 0) throw std::invalid_argument("scan grid points must be >= 1");
  if (step == 0) throw std::invalid_argument("scan grid step must be positive");
  if (last < first) throw std::invalid_argument("scan grid range is empty");
  ScanGrid g;
  g.first_ = first;
  g.step_ = step;
  g.count_ = (last - first) / step + 1;
  return g;
}

ScanGrid ScanGrid::dyadic(unsigned jmin, unsigned jmax) {
  if (jmin > jmax || jmax > 62) throw std::invalid_argument("dyadic grid needs jmin <= jmax <= 62");
  std::vector<std::uint64_t> pts;
  for (unsigned j = jmin; j <= jmax; ++j) pts.push_back(std::uint64_t{1} << j);
  return explicit_points(std::move(pts));
}

ScanGrid ScanGrid::explicit_points(std::vector<std::uint64_t> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw std::invalid_argument("scan grid is empty");
  if (points.front() == 0) throw std::invalid_argument("scan grid points must be >= 1");
  ScanGrid g;
  g.count_ = points.size();
  g.points_ = std::move(points);
  return g;
}

ScanGrid ScanGrid::parse(std::string_view spec, std::uint64_t nmin, std::uint64_t nmax) {
  if (spec == "dense") return arithmetic(std::max<std::uint64_t>(nmin, 1), nmax);
  if (spec.starts_with("step:")) {
    return arithmetic(std::max<std::uint64_t>(nmin, 1), nmax, parse_uint(spec.substr(5), "grid step"));
  }
  if (spec == "dyadic") {
    std::vector<std::uint64_t> pts;
    for (std::uint64_t v = 1; v <= nmax; v *= 2) {
      if (v >= nmin) pts.push_back(v);
      if (v > nmax / 2) break;
    }
    return explicit_points(std::move(pts));
  }
  if (spec.starts_with("dyadic:")) {
    const auto rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("grid dyadic:A:B needs two exponents");
    return dyadic(static_cast<unsigned>(parse_uint(rest.substr(0, colon), "dyadic exponent")),
                  static_cast<unsigned>(parse_uint(rest.substr(colon + 1), "dyadic exponent")));
  }
  if (spec.starts_with("list:")) {
    std::vector<std::uint64_t> pts;
    auto rest = spec.substr(5);
    while (true) {
      const auto comma = rest.find(',');
      pts.push_back(parse_uint(rest.substr(0, comma), "grid point"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return explicit_points(std::move(pts));
  }
  throw std::invalid_argument("unknown grid '" + std::string(spec) +
                              "' (expected dyadic, dyadic:A:B, step:K, dense or list:a,b,...)");
}

std::uint64_t ScanGrid::size() const noexcept { return count_; }

std::uint64_t ScanGrid::at(std::uint64_t i) const noexcept {
  return points_.empty() ? first_ + i * step_ : points_[i];
}

ScanState seed_state(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("seed_state: n must be >= 1");
  const auto table = shared_primes(n + 2);
  ScanState s;
  s.n = n;
  const auto primes = table->primes_through(n + 1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    const double lp = table->log_prime(i);
    if (p <= n) s.log_rho += static_cast<double>(n / p) * lp;
    s.log_sigma += static_cast<double>(n / (p - 1)) * lp;
  }
  const std::uint64_t r = isqrt(n);
  for (std::uint64_t k = 1; k <= r; ++k) {
    const std::uint64_t v = n / k + 1;
    if (!table->is_prime(v)) continue;
    s.s1 += log_of(v);
    ++s.card_A;
  }
  s.s2 = s2_by_counting(n);
  return s;
}

void advance_state(ScanState& s, std::vector<std::uint64_t>& divisors) {
  const std::uint64_t n = s.n;
  const std::uint64_t m = n + 1;
  const auto table = shared_primes(m + 1);
  const auto sieve = shared_factor_sieve(m);

  divisors.assign(1, 1);
  const auto add_prime_power = [&](std::uint64_t p, std::uint64_t e) {
    s.log_rho += log_of(p);
    const std::size_t base = divisors.size();
    std::uint64_t pk = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
    }
  };
  if (m <= sieve->limit()) {
    for (std::uint64_t rest = m; rest > 1;) {
      const std::uint64_t p = sieve->smallest_factor(rest);
      std::uint64_t e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      add_prime_power(p, e);
    }
  } else {
    for (const auto& [p, e] : factorize(m)) add_prime_power(p, e);
  }
  std::sort(divisors.begin(), divisors.end());

  const std::uint64_t r = isqrt(n);
  for (const std::uint64_t d : divisors) {
    if (table->is_prime(d + 1)) s.log_sigma += log_of(d + 1);
    // k = m / d moves from value d to d + 1.
    const std::uint64_t k = m / d;
    if (k == m) {
      s.s2 += log_of(2);
      continue;
    }
    const bool was_prime = table->is_prime(d);
    const bool now_prime = table->is_prime(d + 1);
    if (!was_prime && !now_prime) continue;
    const double delta = (now_prime ? log_of(d + 1) : 0.0) - (was_prime ? log_of(d) : 0.0);
    if (k <= r) {
      s.s1 += delta;
      s.card_A = s.card_A + now_prime - was_prime;
    } else {
      s.s2 += delta;
    }
  }
  const std::uint64_t r_next = isqrt(m);
  if (r_next > r && table->is_prime(r_next + 1)) {
    const double moved = log_of(r_next + 1);
    s.s2 -= moved;
    s.s1 += moved;
    ++s.card_A;
  }
  s.n = m;
}

ScanRecord make_record(const ScanState& s, double c) {
  ScanRecord r;
  const double n = static_cast<double>(s.n);
  const double log_n = std::log(n);
  r.n = s.n;
  r.log_rho = s.log_rho;
  r.log_sigma = s.log_sigma;
  r.residual_rho = s.log_rho - (n * log_n - (c + 1.0) * n);
  r.residual_sigma = s.log_sigma - (n * log_n - n);
  r.card_A = s.card_A;
  r.conj2_stat = static_cast<double>(s.card_A) * log_n / std::sqrt(n);
  r.s1 = s.s1;
  r.s2 = s.s2;
  return r;
}

namespace {

struct Chunk {
  std::uint64_t begin;  // grid index range [begin, end)
  std::uint64_t end;
};

std::vector<ScanRecord> run_chunk(const ScanGrid& grid, const Chunk& chunk, std::uint64_t interval,
                                  double c) {
  std::vector<ScanRecord> out;
  out.reserve(chunk.end - chunk.begin);
  const std::uint64_t first = grid.at(chunk.begin);
  ScanState state = seed_state(std::max<std::uint64_t>(1, first / interval * interval));
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t i = chunk.begin; i < chunk.end; ++i) {
    const std::uint64_t target = grid.at(i);
    while (state.n < target) advance_state(state, scratch);
    out.push_back(make_record(state, c));
  }
  return out;
}

}  // namespace

void scan_each(const ScanGrid& grid, const ScanOptions& options,
               const std::function<void(const ScanRecord&)>& sink) {
  if (options.checkpoint == 0) throw std::invalid_argument("scan: checkpoint interval must be positive");
  if (grid.size() == 0) return;
  const double c = std::isnan(options.c) ? reference_constant().midpoint() : options.c;
  const unsigned workers = std::max(1u, options.workers);

  // Warm the shared tables once so workers only read them.
  shared_primes(grid.back() + 2);
  shared_factor_sieve(grid.back() + 1);

  std::vector<Chunk> chunks;
  for (std::uint64_t i = 0; i < grid.size();) {
    const std::uint64_t key = grid.at(i) / options.checkpoint;
    std::uint64_t j = i + 1;
    while (j < grid.size() && grid.at(j) / options.checkpoint == key) ++j;
    chunks.push_back({i, j});
    i = j;
  }

  // Batches of `workers` chunks bound memory to workers * checkpoint records.
  std::vector<std::vector<ScanRecord>> results(workers);
  for (std::size_t base = 0; base < chunks.size(); base += workers) {
    const std::size_t count = std::min<std::size_t>(workers, chunks.size() - base);
    if (count == 1) {
      results[0] = run_chunk(grid, chunks[base], options.checkpoint, c);
    } else {
      std::vector<std::thread> threads;
      std::vector<std::exception_ptr> errors(count);
      for (std::size_t t = 0; t < count; ++t) {
        threads.emplace_back([&, t] {
          try {
            results[t] = run_chunk(grid, chunks[base + t], options.checkpoint, c);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : threads) th.join();
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (std::size_t t = 0; t < count; ++t) {
      for (const auto& rec : results[t]) sink(rec);
      results[t].clear();
    }
  }
}

std::vector<ScanRecord> scan(const ScanGrid& grid, const ScanOptions& options) {
  std::vector<ScanRecord> out;
  out.reserve(grid.size());
  scan_each(grid, options, [&](const ScanRecord& r) { out.push_back(r); });
  return out;
}

void BlockStats::add(const ScanRecord& r) {
  if (r.n == 0) return;
  const auto j = static_cast<unsigned>(std::bit_width(r.n) - 1);
  if (blocks_.size() <= j) {
    const std::size_t old = blocks_.size();
    blocks_.resize(j + 1);
    for (std::size_t i = old; i <= j; ++i) blocks_[i].j = static_cast<unsigned>(i);
  }
  BlockSummary& b = blocks_[j];
  const double n = static_cast<double>(r.n);
  const double log_n = std::log(n);
  const double root = std::sqrt(n);
  b.rho_sup = std::max(b.rho_sup, std::abs(r.residual_rho) / root);
  const double prop10 = log_factorial(r.n) - r.log_rho - c_ * n;
  b.prop10_sup = std::max(b.prop10_sup, std::abs(prop10) / root);
  if (r.n >= 2) {
    b.sigma_sup = std::max(b.sigma_sup, std::abs(r.residual_sigma) / std::sqrt(n * log_n));
    b.card_envelope_sup =
        std::max(b.card_envelope_sup, static_cast<double>(r.card_A) * std::sqrt(log_n / n));
  }
  if (b.count == 0) {
    b.conj2_min = b.conj2_max = r.conj2_stat;
  } else {
    b.conj2_min = std::min(b.conj2_min, r.conj2_stat);
    b.conj2_max = std::max(b.conj2_max, r.conj2_stat);
  }
  b.c_uncertainty = std::max(b.c_uncertainty, n * c_width_);
  ++b.count;
}

std::vector<BlockSummary> BlockStats::blocks() const {
  std::vector<BlockSummary> out;
  for (const auto& b : blocks_) {
    if (b.count) out.push_back(b);
  }
  return out;
}

}  // namespace lcmf
