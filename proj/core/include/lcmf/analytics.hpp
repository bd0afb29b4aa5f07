#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lcmf/rhosigma.hpp"

namespace lcmf {

/// Closed interval [lo, hi].
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
  /// True when [lo, hi] meets [a, b).
  bool overlaps(double a, double b) const noexcept { return lo < b && a <= hi; }
  /// True when [lo, hi] lies inside [a, b).
  bool within(double a, double b) const noexcept { return a <= lo && hi < b; }
};

/// 2 * (sum_{x < m <= 2x} log m / m^2 + (log 2x + 1) / (2x)), rounded upward.
/// Majorizes sum_{p > x} log p / (p (p - 1)).
double tail_majorant(std::uint64_t x);

/// Enclosure of c = sum_p log p / (p (p - 1)) from the primes <= floor(x).
/// lo is the partial sum minus a floating rounding pad, hi adds the pad and
/// tail_majorant. Throws std::invalid_argument when x < 100.
Enclosure constant_c(double x);

/// Tail cut used for reference_constant(); its width is below 1e-6.
inline constexpr std::uint64_t kReferenceTailCut = 50'000'000;

/// constant_c(kReferenceTailCut), computed once per process.
const Enclosure& reference_constant();

/// sum_{k=1}^n theta(n/k), which equals log rho_n.
double theta_sum_rho(std::uint64_t n);
/// sum_{k=1}^n theta(n/k + 1), which equals log sigma_n.
double theta_sum_sigma(std::uint64_t n);

/// Sum of log floor(n/k + 1) over k <= n with floor(n/k + 1) prime, split at
/// k <= sqrt(n) (s1) and k > sqrt(n) (s2). total is s1 + s2.
struct SSplit {
  double total = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
};
SSplit s_split(std::uint64_t n);

/// s2 by counting, per prime p <= isqrt(n) + 1, the k > isqrt(n) with
/// floor(n/k) = p - 1.
double s2_by_counting(std::uint64_t n);

/// Number of k <= isqrt(n) with floor(n/k + 1) prime. These values are
/// pairwise distinct, so this is card A_n.
std::uint64_t card_a(std::uint64_t n);

/// sum_p sum_{i >= 2} floor(n / p^i) log p, which equals log n! - log rho_n.
double higher_power_sum(std::uint64_t n);

/// higher_power_sum(n) - c n.
double prop10_residual(std::uint64_t n, double c);
inline double prop10_residual(std::uint64_t n) {
  return prop10_residual(n, reference_constant().midpoint());
}

/// log n! via lgamma.
double log_factorial(std::uint64_t n);

struct ScanRecord {
  std::uint64_t n = 0;
  double log_rho = 0.0;
  double log_sigma = 0.0;
  double residual_rho = 0.0;    // log_rho - (n log n - (c + 1) n)
  double residual_sigma = 0.0;  // log_sigma - (n log n - n)
  std::uint64_t card_A = 0;
  double conj2_stat = 0.0;      // card_A log n / sqrt(n)
  double s1 = 0.0;
  double s2 = 0.0;
};

/// Sorted, duplicate-free set of n >= 1 to scan.
class ScanGrid {
 public:
  /// first, first + step, ... up to last.
  static ScanGrid arithmetic(std::uint64_t first, std::uint64_t last, std::uint64_t step = 1);
  /// Powers of two 2^jmin, ..., 2^jmax.
  static ScanGrid dyadic(unsigned jmin, unsigned jmax);
  static ScanGrid explicit_points(std::vector<std::uint64_t> points);

  /// "dyadic" (powers of two in [nmin, nmax]), "dyadic:A:B", "step:K"
  /// (nmin, nmin + K, ... <= nmax), "dense" (step:1) or "list:a,b,...".
  /// Throws std::invalid_argument on malformed specs or empty grids.
  static ScanGrid parse(std::string_view spec, std::uint64_t nmin, std::uint64_t nmax);

  std::uint64_t size() const noexcept;
  std::uint64_t at(std::uint64_t i) const noexcept;
  std::uint64_t front() const noexcept { return at(0); }
  std::uint64_t back() const noexcept { return at(size() - 1); }

 private:
  std::uint64_t first_ = 1;
  std::uint64_t step_ = 1;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> points_;  // used when nonempty
};

struct ScanOptions {
  unsigned workers = 1;
  /// Streams restart from exact values at multiples of this interval, so a
  /// record depends only on (n, checkpoint, c).
  std::uint64_t checkpoint = kDefaultCheckpointInterval;
  /// Value of c used in residual_rho; NaN selects reference_constant().
  double c = std::numeric_limits<double>::quiet_NaN();
};

/// Running state of the incremental scan at one n.
struct ScanState {
  std::uint64_t n = 0;
  double log_rho = 0.0;
  double log_sigma = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  std::uint64_t card_A = 0;
};

/// Exact-from-scratch state at n >= 1.
ScanState seed_state(std::uint64_t n);
/// Moves the state from n to n + 1 using only the divisors of n + 1.
/// Requires shared_primes() to cover n + 2.
void advance_state(ScanState& state, std::vector<std::uint64_t>& scratch);

ScanRecord make_record(const ScanState& state, double c);

/// Emits one record per grid point, in increasing n, to `sink`. Work is split
/// into checkpoint chunks handled by `options.workers` threads; output is
/// independent of the worker count.
void scan_each(const ScanGrid& grid, const ScanOptions& options,
               const std::function<void(const ScanRecord&)>& sink);
std::vector<ScanRecord> scan(const ScanGrid& grid, const ScanOptions& options = {});

/// Envelope statistics over one dyadic block [2^j, 2^(j+1)).
struct BlockSummary {
  unsigned j = 0;
  std::uint64_t count = 0;
  double rho_sup = 0.0;         // sup |residual_rho| / sqrt(n)
  double sigma_sup = 0.0;       // sup |residual_sigma| / sqrt(n log n), n >= 2
  double prop10_sup = 0.0;      // sup |log n! - log_rho - c n| / sqrt(n)
  double conj2_min = 0.0;
  double conj2_max = 0.0;
  double card_envelope_sup = 0.0;  // sup card_A sqrt(log n / n), n >= 2
  double c_uncertainty = 0.0;   // largest n in block times the width of c
};

class BlockStats {
 public:
  BlockStats(double c, double c_width) : c_(c), c_width_(c_width) {}

  void add(const ScanRecord& r);
  /// Nonempty blocks in increasing j.
  std::vector<BlockSummary> blocks() const;

 private:
  double c_;
  double c_width_;
  std::vector<BlockSummary> blocks_;
};

enum class OutputFormat { Csv, Json };

/// Parses "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(std::string_view s);

/// Shortest round-trip decimal form of v.
std::string format_double(double v);

/// Streams records as CSV (header
/// n,log_rho,log_sigma,residual_rho,residual_sigma,card_A,conj2_stat,s1,s2)
/// or as a JSON array of objects with the same field names.
class ScanWriter {
 public:
  ScanWriter(std::ostream& out, OutputFormat format);
  void write(const ScanRecord& r);
  /// Closes the JSON array; no-op for CSV. Idempotent.
  void finish();

  static std::string csv_header();

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::uint64_t written_ = 0;
  bool finished_ = false;
};

std::string render_blocks_csv(const std::vector<BlockSummary>& blocks);
std::string render_blocks_json(const std::vector<BlockSummary>& blocks);

/// gnuplot script plotting the residual columns of a scan CSV.
std::string gnuplot_script(const std::string& csv_path);

}  // namespace lcmf
