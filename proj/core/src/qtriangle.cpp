#include "lcmf/qtriangle.hpp"

#include <stdexcept>
#include <string>

namespace lcmf {

FactoredNatural q(std::uint64_t n, std::uint64_t k, std::uint64_t node_budget) {
  if (k > n) {
    throw std::invalid_argument("q(n, k) requires k <= n (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
  PartConstraint c;
  c.kind = PartConstraint::Kind::IntegerSum;
  c.integer_budget = n - k;
  c.max_parts = k;
  c.integer_weights = {0, 0};
  for (std::uint64_t part = 2; part - 1 <= c.integer_budget; ++part) {
    c.integer_weights.push_back(part - 1);
  }
  return lcm_of_part_products(c, node_budget);
}

FactoredNatural d(std::uint64_t n, std::uint64_t k, std::uint64_t node_budget) {
  return q(n + k, k, node_budget);
}

FactoredNatural sigma_via_diagonal(std::uint64_t n, std::uint64_t node_budget) {
  return d(n, n, node_budget);
}

FactoredNatural diagonal_lcm(std::uint64_t n, std::uint64_t K, std::uint64_t node_budget) {
  FactoredNatural acc;
  for (std::uint64_t k = 0; k <= K; ++k) acc = lcm(acc, d(n, k, node_budget));
  return acc;
}

TriangleTable build_triangle(std::uint64_t nmax, std::uint64_t node_budget) {
  TriangleTable table;
  table.rows.resize(nmax + 1);
  for (std::uint64_t n = 0; n <= nmax; ++n) {
    table.rows[n].reserve(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) table.rows[n].push_back(q(n, k, node_budget));
  }
  return table;
}

std::string render_triangle_csv(const TriangleTable& table) {
  std::string out;
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += row[k].to_decimal();
    }
    out += '\n';
  }
  return out;
}

}  // namespace lcmf
