#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcmf/factored.hpp"
#include "lcmf/multiset_search.hpp"

namespace lcmf {

/// q(n, k): lcm of i_1 ... i_k over k-tuples of positive integers with
/// i_1 + ... + i_k <= n. Enumerates the parts >= 2 only: j such parts are
/// admissible iff j <= k and their sum of (i - 1) is at most n - k.
/// Throws std::invalid_argument when k > n.
FactoredNatural q(std::uint64_t n, std::uint64_t k,
                  std::uint64_t node_budget = kDefaultNodeBudget);

/// d(n, k) = q(n + k, k), the n-th diagonal of the triangle.
FactoredNatural d(std::uint64_t n, std::uint64_t k,
                  std::uint64_t node_budget = kDefaultNodeBudget);

/// sigma_n computed as d(n, n) = q(2n, n).
FactoredNatural sigma_via_diagonal(std::uint64_t n,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

/// lcm of d(n, 0), ..., d(n, K).
FactoredNatural diagonal_lcm(std::uint64_t n, std::uint64_t K,
                             std::uint64_t node_budget = kDefaultNodeBudget);

struct TriangleTable {
  /// rows[n][k] = q(n, k) for 0 <= k <= n <= nmax.
  std::vector<std::vector<FactoredNatural>> rows;

  std::uint64_t nmax() const { return rows.empty() ? 0 : rows.size() - 1; }
};

TriangleTable build_triangle(std::uint64_t nmax,
                             std::uint64_t node_budget = kDefaultNodeBudget);

/// One CSV line per row n, holding q(n, 0), ..., q(n, n) as decimals.
std::string render_triangle_csv(const TriangleTable& table);

}  // namespace lcmf
