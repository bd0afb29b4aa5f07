#include "lcmf/pif.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "lcmf/errors.hpp"
#include "lcmf/primes.hpp"

namespace lcmf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::uint64_t floor_budget(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("x must be a finite nonnegative real");
  }
  if (x >= 1.8e19) throw std::invalid_argument("x too large");
  return static_cast<std::uint64_t>(std::floor(x));
}

}  // namespace

WeightFunction WeightFunction::power(double alpha) {
  if (!std::isfinite(alpha) || alpha < 1.0) {
    throw std::invalid_argument("weight m^alpha requires a finite alpha >= 1");
  }
  return WeightFunction(Kind::Power, alpha);
}

WeightFunction WeightFunction::parse(std::string_view spec) {
  const auto s = trim(spec);
  if (s == "m") return linear();
  if (s == "m-1") return shifted();
  if (s == "log") return log();
  if (s.starts_with("m^")) {
    const auto digits = s.substr(2);
    double alpha = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), alpha);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("bad exponent in weight spec '" + std::string(spec) + "'");
    }
    return power(alpha);
  }
  throw std::invalid_argument("unknown weight spec '" + std::string(spec) +
                              "' (expected m, m-1, m^A or log)");
}

bool WeightFunction::integer_valued() const noexcept {
  switch (kind_) {
    case Kind::Linear:
    case Kind::Shifted: return true;
    case Kind::Power: return alpha_ == std::floor(alpha_) && alpha_ <= 64.0;
    case Kind::Log: return false;
  }
  return false;
}

Weight WeightFunction::weight(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("weight: m must be >= 1");
  switch (kind_) {
    case Kind::Linear: return {static_cast<double>(m), m};
    case Kind::Shifted: return {static_cast<double>(m - 1), m - 1};
    case Kind::Power: {
      const double v = std::pow(static_cast<double>(m), alpha_);
      if (integer_valued()) return {v, checked_pow(m, static_cast<std::uint64_t>(alpha_))};
      return {v, std::nullopt};
    }
    case Kind::Log: return {std::log(static_cast<double>(m)), std::nullopt};
  }
  return {};
}

std::string WeightFunction::spec() const {
  switch (kind_) {
    case Kind::Linear: return "m";
    case Kind::Shifted: return "m-1";
    case Kind::Log: return "log";
    case Kind::Power: {
      char buf[64];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, alpha_);
      return "m^" + std::string(buf, ptr);
    }
  }
  return {};
}

std::uint64_t floor_exp(double x) {
  if (!(x >= 0.0) || x > 43.0) throw std::invalid_argument("floor_exp: x must be in [0, 43]");
  // Bracket e^x between downward and upward roundings until both floors agree.
  // e^x is irrational for x > 0, so the loop terminates.
  if (x == 0.0) return 1;
  mpfr_t lo;
  mpfr_t hi;
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(lo, x, MPFR_RNDN);
    mpfr_set_d(hi, x, MPFR_RNDN);
    mpfr_exp(lo, lo, MPFR_RNDD);
    mpfr_exp(hi, hi, MPFR_RNDU);
    mpfr_floor(lo, lo);
    mpfr_floor(hi, hi);
    const bool settled = mpfr_equal_p(lo, hi) != 0;
    const auto p = static_cast<std::uint64_t>(mpfr_get_uj(lo, MPFR_RNDD));
    mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (settled) return p;
  }
}

HypothesisReport check_hypothesis(const std::function<double(std::uint64_t)>& f,
                                  std::uint64_t bound) {
  if (bound < 4) throw std::invalid_argument("check_hypothesis: bound must be >= 4");
  HypothesisReport report;
  report.checked_bound = bound;

  std::vector<double> values(bound + 1, 0.0);
  std::vector<double> ratio(bound + 1, 0.0);  // f(n) / log n
  for (std::uint64_t n = 2; n <= bound; ++n) {
    values[n] = f(n);
    if (!(values[n] > 0.0)) report.nonpositive.push_back(n);
    ratio[n] = values[n] / std::log(static_cast<double>(n));
  }
  if (!report.nonpositive.empty()) return report;

  constexpr double kRelTol = 1e-12;
  const auto le = [](double a, double b) { return a <= b + kRelTol * std::abs(b); };
  const auto monotone_from = [&](std::uint64_t start, const auto& g) {
    for (std::uint64_t n = start; n < bound; ++n) {
      if (!le(g(n), g(n + 1))) return false;
    }
    return true;
  };
  const auto tilde = [&](std::uint64_t n) { return ratio[n]; };
  const auto over_identity = [&](std::uint64_t n) {
    return values[n] / static_cast<double>(n);
  };

  if (monotone_from(2, tilde)) {
    report.fast_path = HypothesisShortcut::MonotoneRatio;
    return report;
  }
  if (monotone_from(3, tilde) && le(ratio[2], ratio[4])) {
    report.fast_path = HypothesisShortcut::MonotoneRatioBeyond2;
    return report;
  }
  if (monotone_from(2, over_identity) && le(ratio[2], ratio[4])) {
    report.fast_path = HypothesisShortcut::MonotoneOverIdentity;
    return report;
  }

  for (std::uint64_t a = 2; a <= bound / 2; ++a) {
    for (std::uint64_t b = 2 * a; b <= bound; b += a) {
      ++report.divisor_pairs_checked;
      if (!le(ratio[a], ratio[b])) report.violations.emplace_back(a, b);
    }
  }
  return report;
}

HypothesisReport check_hypothesis(const WeightFunction& f, std::uint64_t bound) {
  return check_hypothesis([&f](std::uint64_t m) { return f(m); }, bound);
}

namespace {

std::shared_ptr<const PrimeTable> primes_for_pi_f(std::uint64_t pmax) {
  if (pmax > kPiFPrimeLimit) {
    throw BudgetExceeded("pi_f: needs primes up to " + std::to_string(pmax) + ", above the limit " +
                         std::to_string(kPiFPrimeLimit));
  }
  return shared_primes(pmax);
}

}  // namespace

FactoredNatural pi_f(const WeightFunction& f, double x) {
  using Kind = WeightFunction::Kind;
  FactoredBuilder builder;

  if (f.kind() == Kind::Log) {
    const std::uint64_t cap = floor_exp(x);
    for (const std::uint64_t p : primes_for_pi_f(cap)->primes_through(cap)) {
      std::uint64_t e = 0;
      for (std::uint64_t pk = p; pk <= cap; pk = (pk > cap / p) ? cap + 1 : pk * p) ++e;
      builder.push(p, e);
    }
    return std::move(builder).build();
  }

  if (f.integer_valued()) {
    const std::uint64_t budget = floor_budget(x);
    // f(p) >= p - 1 for every catalog kind, so p <= budget + 1 bounds the primes.
    const std::uint64_t pmax = budget + 1;
    for (const std::uint64_t p : primes_for_pi_f(pmax)->primes_through(pmax)) {
      const auto w = f.weight(p).exact;
      if (!w || *w > budget) {
        if (f.kind() == Kind::Power) break;
        continue;
      }
      builder.push(p, budget / *w);
    }
    return std::move(builder).build();
  }

  // m^alpha with non-integral alpha.
  floor_budget(x);
  const auto pmax = static_cast<std::uint64_t>(std::pow(x, 1.0 / f.alpha())) + 2;
  for (const std::uint64_t p : primes_for_pi_f(pmax)->primes_through(pmax)) {
    const double w = f(p);
    if (w > x) break;
    builder.push(p, static_cast<std::uint64_t>(std::floor(x / w)));
  }
  return std::move(builder).build();
}

PartConstraint oracle_constraint(const WeightFunction& f, double x) {
  PartConstraint c;
  if (f.kind() == WeightFunction::Kind::Log) {
    c.kind = PartConstraint::Kind::Product;
    c.product_cap = floor_exp(x);
    return c;
  }
  if (f.integer_valued()) {
    c.kind = PartConstraint::Kind::IntegerSum;
    c.integer_budget = floor_budget(x);
    c.integer_weights = {0, 0};
    for (std::uint64_t m = 2;; ++m) {
      const auto w = f.weight(m).exact;
      if (!w || *w > c.integer_budget) break;
      c.integer_weights.push_back(*w);
    }
    return c;
  }
  floor_budget(x);
  c.kind = PartConstraint::Kind::RealSum;
  c.real_budget = x;
  c.real_weights = {0.0, 0.0};
  for (std::uint64_t m = 2;; ++m) {
    const double w = f(m);
    if (w > x) break;
    c.real_weights.push_back(w);
  }
  return c;
}

FactoredNatural lcm_oracle(const WeightFunction& f, double x, std::uint64_t node_budget,
                           SearchStats* stats) {
  return lcm_of_part_products(oracle_constraint(f, x), node_budget, stats);
}

}  // namespace lcmf
