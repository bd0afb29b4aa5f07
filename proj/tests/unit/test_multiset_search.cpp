#include <gtest/gtest.h>

#include "lcmf/errors.hpp"
#include "lcmf/multiset_search.hpp"
#include "oracles.hpp"

using namespace lcmf;

namespace {

PartConstraint integer_sum(std::uint64_t budget, std::uint64_t (*w)(std::uint64_t)) {
  PartConstraint c;
  c.kind = PartConstraint::Kind::IntegerSum;
  c.integer_budget = budget;
  c.integer_weights = {0, 0};
  for (std::uint64_t m = 2; w(m) <= budget; ++m) c.integer_weights.push_back(w(m));
  return c;
}

}  // namespace

TEST(MultisetSearch, EmptyBudgetGivesOne) {
  SearchStats stats;
  const auto v = lcm_of_part_products(integer_sum(0, [](std::uint64_t m) { return m; }),
                                      kDefaultNodeBudget, &stats);
  EXPECT_TRUE(v.is_one());
  EXPECT_EQ(stats.nodes_visited, 1u);
}

TEST(MultisetSearch, ProductCap) {
  PartConstraint c;
  c.kind = PartConstraint::Kind::Product;
  for (std::uint64_t cap = 1; cap <= 300; ++cap) {
    c.product_cap = cap;
    ASSERT_EQ(oracle::to_mpz(lcm_of_part_products(c)), oracle::lcm_by_product(cap)) << cap;
  }
}

TEST(MultisetSearch, IntegerSumMatchesBruteForce) {
  for (std::uint64_t budget = 0; budget <= 16; ++budget) {
    const auto c = integer_sum(budget, [](std::uint64_t m) { return m * m - m; });
    const auto want = oracle::lcm_by_weight([](std::uint64_t m) { return double(m * m - m); },
                                            static_cast<double>(budget));
    ASSERT_EQ(oracle::to_mpz(lcm_of_part_products(c)), want) << budget;
  }
}

TEST(MultisetSearch, MaxPartsMatchesTuples) {
  // k parts >= 1 summing to <= n: parts >= 2 weigh (i - 1) against n - k.
  for (std::uint64_t n = 0; n <= 9; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      auto c = integer_sum(n - k, [](std::uint64_t m) { return m - 1; });
      c.max_parts = k;
      ASSERT_EQ(oracle::to_mpz(lcm_of_part_products(c)), oracle::q_tuples(n, k)) << n << "," << k;
    }
  }
}

TEST(MultisetSearch, RealSum) {
  PartConstraint c;
  c.kind = PartConstraint::Kind::RealSum;
  c.real_budget = 7.3;
  c.real_weights = {0.0, 0.0};
  for (std::uint64_t m = 2; m * 1.5 <= 7.3; ++m) c.real_weights.push_back(m * 1.5);
  const auto want = oracle::lcm_by_weight([](std::uint64_t m) { return m * 1.5; }, 7.3);
  EXPECT_EQ(oracle::to_mpz(lcm_of_part_products(c)), want);
}

TEST(MultisetSearch, BudgetExceeded) {
  const auto c = integer_sum(30, [](std::uint64_t m) { return m - 1; });
  EXPECT_THROW(lcm_of_part_products(c, 100), BudgetExceeded);
  SearchStats stats;
  EXPECT_NO_THROW(lcm_of_part_products(c, kDefaultNodeBudget, &stats));
  EXPECT_GT(stats.nodes_visited, 100u);
  EXPECT_NO_THROW(lcm_of_part_products(c, stats.nodes_visited));
  EXPECT_THROW(lcm_of_part_products(c, stats.nodes_visited - 1), BudgetExceeded);
}
