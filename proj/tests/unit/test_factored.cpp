#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "lcmf/errors.hpp"
#include "lcmf/factored.hpp"
#include "lcmf/rhosigma.hpp"
#include "oracles.hpp"

using namespace lcmf;

namespace {

FactoredNatural fac(std::initializer_list<PrimePower> pp) { return FactoredNatural::from_factors(pp); }

FactoredNatural random_value(std::mt19937_64& gen) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 1'000'003};
  std::vector<PrimePower> pp;
  for (const auto p : primes) {
    if (gen() % 2) pp.push_back({p, gen() % 6});
  }
  return FactoredNatural::from_factors(pp);
}

}  // namespace

TEST(Factored, One) {
  EXPECT_TRUE(FactoredNatural::one().is_one());
  EXPECT_TRUE(FactoredNatural{}.factors().empty());
  EXPECT_EQ(multiply(FactoredNatural::one(), FactoredNatural::one()), FactoredNatural::one());
  const auto x = FactoredNatural::from_integer(360);
  EXPECT_EQ(lcm(FactoredNatural::one(), x), x);
  EXPECT_EQ(FactoredNatural::one().log_value(), 0.0);
  EXPECT_EQ(FactoredNatural::one().to_string(), "1");
  EXPECT_EQ(FactoredNatural::one().to_decimal(), "1");
}

TEST(Factored, FromInteger) {
  EXPECT_TRUE(FactoredNatural::from_integer(1).is_one());
  EXPECT_EQ(FactoredNatural::from_integer(12), fac({{2, 2}, {3, 1}}));
  EXPECT_EQ(FactoredNatural::from_integer(360), fac({{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(oracle::to_mpz(FactoredNatural::from_integer(360)), 360);
  EXPECT_THROW(FactoredNatural::from_integer(0), std::invalid_argument);
}

TEST(Factored, FromFactorsCanonicalizes) {
  const auto v = FactoredNatural::from_factors({{5, 1}, {2, 1}, {2, 2}, {3, 0}});
  ASSERT_EQ(v.factors().size(), 2u);
  EXPECT_EQ(v.factors()[0], (PrimePower{2, 3}));
  EXPECT_EQ(v.factors()[1], (PrimePower{5, 1}));
  EXPECT_THROW(FactoredNatural::from_factors({{4, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(FactoredNatural::from_factors({{4, 0}}));
}

TEST(Factored, LcmAndValuation) {
  EXPECT_EQ(lcm(fac({{2, 2}, {3, 1}}), fac({{2, 1}, {5, 1}})), fac({{2, 2}, {3, 1}, {5, 1}}));
  mpz_class ten_fact;
  mpz_fac_ui(ten_fact.get_mpz_t(), 10);
  EXPECT_EQ(valuation(FactoredNatural::from_integer(ten_fact.get_ui()), 2), 8u);
  EXPECT_EQ(valuation(FactoredNatural::from_integer(12), 7), 0u);
  EXPECT_THROW(valuation(FactoredNatural::from_integer(12), 6), std::invalid_argument);
}

TEST(Factored, LogAndRendering) {
  EXPECT_NEAR(fac({{2, 1}}).log_value(), 0.693147, 1e-6);
  EXPECT_NEAR(log_value(rho(6)), std::log(360.0), 1e-12);
  EXPECT_NEAR(log_value(rho(6)), 5.8861, 1e-4);
  EXPECT_EQ(fac({{2, 3}, {3, 2}, {5, 1}}).to_string(), "2^3 * 3^2 * 5");
  EXPECT_EQ(fac({{2, 4}, {3, 2}, {5, 1}}).to_decimal(), "720");
  EXPECT_EQ(to_decimal(sigma(6)), "60480");
  EXPECT_EQ(oracle::to_mpz(sigma(6)), oracle::sigma(6));
}

TEST(Factored, DigitBudget) {
  const auto big = fac({{2, 10'000}});
  EXPECT_THROW(big.to_decimal(100), DigitBudgetExceeded);
  const auto s = big.to_decimal(4000);
  EXPECT_EQ(s.size(), 3011u);
  EXPECT_GE(big.estimated_digits(), s.size());
  EXPECT_EQ(oracle::from_decimal(s), oracle::to_mpz(big));
}

TEST(Factored, DecimalRoundTripUpTo1e5) {
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    ASSERT_EQ(FactoredNatural::from_integer(n).to_decimal(), std::to_string(n)) << n;
  }
}

TEST(Factored, DecimalMatchesBigIntegerProduct) {
  auto gen = oracle::rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = random_value(gen);
    ASSERT_EQ(oracle::from_decimal(v.to_decimal()), oracle::to_mpz(v)) << v.to_string();
  }
  EXPECT_EQ(oracle::from_decimal(sigma(500).to_decimal()), oracle::sigma(500));
}

TEST(Factored, AlgebraicLaws) {
  auto gen = oracle::rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_value(gen);
    const auto b = random_value(gen);
    const auto c = random_value(gen);
    ASSERT_EQ(lcm(lcm(a, b), c), lcm(a, lcm(b, c)));
    ASSERT_EQ(lcm(a, b), lcm(b, a));
    ASSERT_EQ(lcm(a, a), a);
    ASSERT_EQ(multiply(a, b), multiply(b, a));
    const auto ab = multiply(a, b);
    for (const std::uint64_t p : {2, 3, 5, 13, 29, 31, 1'000'003}) {
      ASSERT_EQ(valuation(ab, p), valuation(a, p) + valuation(b, p));
    }
    ASSERT_TRUE(divides(a, ab));
    ASSERT_EQ(divide_exact(ab, b), a);
    ASSERT_TRUE(divides(a, lcm(a, b)));
    mpz_class want_lcm;
    mpz_lcm(want_lcm.get_mpz_t(), oracle::to_mpz(a).get_mpz_t(), oracle::to_mpz(b).get_mpz_t());
    ASSERT_EQ(oracle::to_mpz(lcm(a, b)), want_lcm);
  }
  EXPECT_THROW(divide_exact(fac({{2, 1}}), fac({{3, 1}})), std::domain_error);
}

TEST(Factored, DividesMatchesIntegersUpTo2000) {
  std::vector<FactoredNatural> values(2001);
  for (std::uint64_t n = 1; n <= 2000; ++n) values[n] = FactoredNatural::from_integer(n);
  for (std::uint64_t a = 1; a <= 2000; ++a) {
    for (std::uint64_t b = 1; b <= 2000; ++b) {
      ASSERT_EQ(divides(values[a], values[b]), b % a == 0) << a << " | " << b;
    }
  }
}

TEST(Factored, BuilderChecksOrder) {
  FactoredBuilder b;
  b.push(2, 3);
  b.push(3, 0);
  b.push(5, 1);
  EXPECT_EQ(std::move(b).build(), fac({{2, 3}, {5, 1}}));
  FactoredBuilder bad;
  bad.push(5, 1);
  EXPECT_THROW(bad.push(3, 1), std::invalid_argument);
}
