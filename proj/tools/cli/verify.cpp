#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>

#include "cli.hpp"
#include "lcmf/analytics.hpp"
#include "lcmf/primes.hpp"
#include "lcmf/qtriangle.hpp"
#include "lcmf/rhosigma.hpp"

namespace lcmf::cli {

namespace {

std::string at_n(std::uint64_t n) { return "n=" + std::to_string(n); }

VerifyResult verify_theorem1(const VerifyOptions& o) {
  VerifyResult r{"theorem1", 0, {}};
  std::vector<WeightFunction> fs;
  if (o.f) {
    fs.push_back(WeightFunction::parse(*o.f));
  } else {
    fs = {WeightFunction::linear(), WeightFunction::shifted(), WeightFunction::power(2.0),
          WeightFunction::log()};
  }
  for (const auto& f : fs) {
    const auto hyp = check_hypothesis(f, 1000);
    if (!hyp.passed()) {
      r.violations.push_back("f=" + f.spec() + " fails the divisibility hypothesis on [2, 1000]");
      continue;
    }
    const double xmax = o.xmax.value_or(theorem1_default_xmax(f));
    for (const double x : theorem1_grid(f, xmax)) {
      ++r.cases;
      const auto lhs = pi_f(f, x);
      const auto rhs = lcm_oracle(f, x, o.budget);
      if (lhs != rhs) {
        r.violations.push_back("f=" + f.spec() + " x=" + format_double(x) + ": pi_f=" +
                               lhs.to_string() + " oracle=" + rhs.to_string());
      }
    }
  }
  return r;
}

VerifyResult verify_prop1(const VerifyOptions& o) {
  VerifyResult r{"prop1", 0, {}};
  const std::uint64_t nmax = o.nmax.value_or(12);
  for (std::uint64_t n = 0; n <= nmax; ++n) {
    auto prev = d(n, 0, o.budget);
    for (std::uint64_t k = 0; k <= 2 * n; ++k) {
      auto next = d(n, k + 1, o.budget);
      ++r.cases;
      if (!divides(prev, next)) {
        r.violations.push_back(at_n(n) + " k=" + std::to_string(k) + ": d(n,k) does not divide d(n,k+1)");
      }
      prev = std::move(next);
    }
    const auto stable = d(n, n, o.budget);
    for (std::uint64_t k = n + 1; k <= n + 5; ++k) {
      ++r.cases;
      if (d(n, k, o.budget) != stable) {
        r.violations.push_back(at_n(n) + " k=" + std::to_string(k) + ": d(n,k) != d(n,n)");
      }
    }
  }
  return r;
}

VerifyResult verify_prop2(const VerifyOptions& o) {
  VerifyResult r{"prop2", 0, {}};
  for (std::uint64_t n = 0, nmax = o.nmax.value_or(1000); n <= nmax; ++n) {
    ++r.cases;
    const auto rep = check_prop2(n);
    if (!rep.item_i) r.violations.push_back(at_n(n) + ": item (i)");
    if (!rep.item_ii) r.violations.push_back(at_n(n) + ": item (ii)");
    if (!rep.item_iii) r.violations.push_back(at_n(n) + ": item (iii)");
    if (!rep.item_iv) r.violations.push_back(at_n(n) + ": item (iv)");
  }
  return r;
}

VerifyResult verify_prop3(const VerifyOptions& o) {
  VerifyResult r{"prop3", 0, {}};
  for (std::uint64_t n = 0, nmax = o.nmax.value_or(1000); n <= nmax; ++n) {
    ++r.cases;
    const auto by_prime = check_prop3(n);
    const auto by_value = check_prop3_factored(n);
    if (!by_prime.lower || !by_value.lower) r.violations.push_back(at_n(n) + ": (n+1)! does not divide sigma_n");
    if (!by_prime.upper || !by_value.upper) {
      r.violations.push_back(at_n(n) + ": sigma_n does not divide n! lcm(1..n+1)");
    }
  }
  return r;
}

VerifyResult verify_cor2(const VerifyOptions& o) {
  VerifyResult r{"cor2", 0, {}};
  for (std::uint64_t n = 0, nmax = o.nmax.value_or(25); n <= nmax; ++n) {
    ++r.cases;
    if (sigma_via_diagonal(n, o.budget) != sigma(n)) r.violations.push_back(at_n(n) + ": q(2n,n) != sigma_n");
  }
  return r;
}

VerifyResult verify_theorem2(const VerifyOptions& o) {
  VerifyResult r{"theorem2", 0, {}};
  std::ofstream csv;
  if (o.out) {
    csv.open(*o.out);
    if (!csv) throw std::runtime_error("cannot open " + *o.out);
    csv << valuation_csv_header() << '\n';
  }
  for (std::uint64_t n = 0, nmax = o.nmax.value_or(3000); n <= nmax; ++n) {
    for (const std::uint64_t p : large_primes(n)) {
      ++r.cases;
      try {
        const auto rec = theorem2_valuation(n, p);
        if (csv.is_open()) csv << to_csv_row(rec) << '\n';
      } catch (const std::logic_error& e) {
        r.violations.push_back(at_n(n) + " p=" + std::to_string(p) + ": " + e.what());
      }
    }
  }
  return r;
}

VerifyResult verify_eq14_16(const VerifyOptions& o) {
  VerifyResult r{"eq14-16", 0, {}};
  const std::uint64_t nmax = o.nmax.value_or(100'000);
  std::vector<std::uint64_t> grid;
  for (std::uint64_t i = 1; i <= 1000; ++i) grid.push_back(std::max<std::uint64_t>(1, i * nmax / 1000));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const std::uint64_t n : grid) {
    ++r.cases;
    const double tol = 1e-6 * static_cast<double>(std::max<std::uint64_t>(1, n));
    const double lr = log_value(rho(n));
    const double ls = log_value(sigma(n));
    const auto report = [&](const char* what, double a, double b) {
      if (std::abs(a - b) > tol) {
        r.violations.push_back(at_n(n) + ": " + what + " off by " + format_double(std::abs(a - b)));
      }
    };
    report("theta sum vs log rho", theta_sum_rho(n), lr);
    report("theta sum vs log sigma", theta_sum_sigma(n), ls);
    report("s_total vs log sigma - log rho", s_split(n).total, ls - lr);
  }
  return r;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {"theorem1", "prop1", "prop2", "prop3",
                                               "cor2",     "theorem2", "eq14-16"};
  return ids;
}

double theorem1_default_xmax(const WeightFunction& f) {
  switch (f.kind()) {
    case WeightFunction::Kind::Linear:
    case WeightFunction::Kind::Shifted: return 18.0;
    case WeightFunction::Kind::Power: return 12.0;
    case WeightFunction::Kind::Log: return std::log(40.0);
  }
  return 0.0;
}

std::vector<double> theorem1_grid(const WeightFunction& f, double xmax) {
  if (!(xmax >= 0.0)) throw std::invalid_argument("xmax must be nonnegative");
  std::vector<double> xs;
  const bool is_log = f.kind() == WeightFunction::Kind::Log;
  const double step = is_log ? 0.1 : 0.5;
  for (std::uint64_t i = 0;; ++i) {
    const double x = static_cast<double>(i) * step;
    if (x > xmax * (1 + 1e-12)) break;
    xs.push_back(x);
  }
  if (is_log) {
    for (std::uint64_t m = 1; std::log(static_cast<double>(m)) <= xmax; ++m) {
      xs.push_back(std::log(static_cast<double>(m)));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

VerifyResult verify(std::string_view id, const VerifyOptions& o) {
  if (id == "theorem1") return verify_theorem1(o);
  if (id == "prop1") return verify_prop1(o);
  if (id == "prop2") return verify_prop2(o);
  if (id == "prop3") return verify_prop3(o);
  if (id == "cor2") return verify_cor2(o);
  if (id == "theorem2") return verify_theorem2(o);
  if (id == "eq14-16") return verify_eq14_16(o);
  throw std::invalid_argument("unknown verification id '" + std::string(id) + "'");
}

}  // namespace lcmf::cli
