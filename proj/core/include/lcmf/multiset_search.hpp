#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "lcmf/factored.hpp"

namespace lcmf {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Admissibility rule for finite multisets of parts >= 2.
///
/// Exactly one of the three forms is active. Weights must be nondecreasing in
/// the part, which lets the search stop scanning candidates at the first part
/// that no longer fits.
struct PartConstraint {
  enum class Kind {
    IntegerSum,  // sum of integer_weights[i] <= integer_budget
    RealSum,     // sum of real_weights[i] <= real_budget
    Product,     // product of parts <= product_cap
  };

  Kind kind = Kind::IntegerSum;

  // Indexed by part; entries 0 and 1 are unused. Parts beyond the vector are
  // treated as not fitting.
  std::vector<std::uint64_t> integer_weights;
  std::uint64_t integer_budget = 0;

  std::vector<double> real_weights;
  double real_budget = 0.0;

  std::uint64_t product_cap = 1;

  std::uint64_t max_parts = std::numeric_limits<std::uint64_t>::max();
};

struct SearchStats {
  std::uint64_t nodes_visited = 0;
};

/// lcm of the products of every admissible multiset (the empty multiset
/// contributes 1). Depth-first over nondecreasing parts. Throws BudgetExceeded
/// once more than `node_budget` multisets have been visited.
FactoredNatural lcm_of_part_products(const PartConstraint& constraint,
                                     std::uint64_t node_budget = kDefaultNodeBudget,
                                     SearchStats* stats = nullptr);

}  // namespace lcmf
