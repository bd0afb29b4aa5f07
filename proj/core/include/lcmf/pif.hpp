#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcmf/factored.hpp"
#include "lcmf/multiset_search.hpp"

namespace lcmf {

/// A weight value: always available as a real, and exactly when the weight
/// function is integer valued.
struct Weight {
  double value = 0.0;
  std::optional<std::uint64_t> exact;
};

/// The admissible weight functions f : N* -> R+ handled by pi_f and the lcm
/// oracle: m, m - 1, m^alpha (alpha >= 1) and log m.
class WeightFunction {
 public:
  enum class Kind { Linear, Shifted, Power, Log };

  static WeightFunction linear() { return WeightFunction(Kind::Linear, 1.0); }
  static WeightFunction shifted() { return WeightFunction(Kind::Shifted, 1.0); }
  static WeightFunction log() { return WeightFunction(Kind::Log, 1.0); }
  /// Throws std::invalid_argument unless alpha >= 1 and finite.
  static WeightFunction power(double alpha);

  /// Parses "m", "m-1", "m^A" or "log". Throws std::invalid_argument.
  static WeightFunction parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }

  /// True for m, m - 1 and m^alpha with integral alpha.
  bool integer_valued() const noexcept;

  Weight weight(std::uint64_t m) const;
  double operator()(std::uint64_t m) const { return weight(m).value; }

  /// Canonical spec string, accepted by parse().
  std::string spec() const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  WeightFunction(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  double alpha_;
};

inline Weight weight(const WeightFunction& f, std::uint64_t m) { return f.weight(m); }

/// floor(e^x) as an exact integer, with the boundary settled by long-double
/// logarithms: the result P satisfies log P <= x < log(P + 1). Requires
/// 0 <= x <= 43.
std::uint64_t floor_exp(double x);

/// Which shortcut settled check_hypothesis without scanning divisor pairs.
enum class HypothesisShortcut {
  None,
  MonotoneRatio,          // f(n)/log n nondecreasing on 2..N
  MonotoneRatioBeyond2,   // ... on 3..N, plus the 2 | 4 comparison
  MonotoneOverIdentity,   // f(n)/n nondecreasing on 2..N, plus the 2 | 4 comparison
};

struct HypothesisReport {
  std::uint64_t checked_bound = 0;
  std::uint64_t divisor_pairs_checked = 0;
  /// Divisor pairs (a, b), a | b, a < b, with f(a)/log a > f(b)/log b.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;
  /// m in [2, N] with f(m) <= 0.
  std::vector<std::uint64_t> nonpositive;
  HypothesisShortcut fast_path = HypothesisShortcut::None;

  bool passed() const noexcept { return violations.empty() && nonpositive.empty(); }
};

/// Finite-range falsifier for the admissibility hypothesis: f(m) > 0 for
/// m >= 2 and m -> f(m)/log m nondecreasing along divisibility on [2, N].
/// Passing is evidence over [2, N] only, not a proof. Requires N >= 4.
HypothesisReport check_hypothesis(const std::function<double(std::uint64_t)>& f,
                                  std::uint64_t bound);
HypothesisReport check_hypothesis(const WeightFunction& f, std::uint64_t bound);

/// Largest prime pi_f will sieve for.
inline constexpr std::uint64_t kPiFPrimeLimit = 1'000'000'000;

/// Product over primes of p^floor(x / f(p)). Requires x >= 0. Throws
/// BudgetExceeded when a prime above kPiFPrimeLimit could contribute.
FactoredNatural pi_f(const WeightFunction& f, double x);

/// lcm of i_1 ... i_k over all finite multisets of parts >= 2 with
/// f(i_1) + ... + f(i_k) <= x. Throws BudgetExceeded past `node_budget`.
FactoredNatural lcm_oracle(const WeightFunction& f, double x,
                           std::uint64_t node_budget = kDefaultNodeBudget,
                           SearchStats* stats = nullptr);

/// The constraint lcm_oracle enumerates, exposed for reuse.
PartConstraint oracle_constraint(const WeightFunction& f, double x);

}  // namespace lcmf
