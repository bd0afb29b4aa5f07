#include "lcmf/multiset_search.hpp"

#include <algorithm>
#include <string>

#include "lcmf/errors.hpp"
#include "lcmf/primes.hpp"

namespace lcmf {

namespace {

struct PartFactor {
  std::uint32_t prime_index;
  std::uint32_t exponent;
};

class Search {
 public:
  Search(const PartConstraint& c, std::uint64_t budget) : c_(c), budget_(budget) {
    max_part_ = largest_part();
    // Every single-part multiset {i}, 2 <= i <= max_part_, is a node.
    if (c_.max_parts > 0 && max_part_ > budget_ + 1) {
      throw BudgetExceeded("multiset enumeration exceeded its budget of " +
                           std::to_string(budget_) + " nodes");
    }
    const auto table = shared_primes(std::max<std::uint64_t>(max_part_, 2));
    const auto primes = table->primes_through(max_part_);
    primes_.assign(primes.begin(), primes.end());
    current_.assign(primes_.size(), 0);
    best_.assign(primes_.size(), 0);
    part_factors_.resize(static_cast<std::size_t>(max_part_ + 1));
    for (std::uint64_t i = 2; i <= max_part_; ++i) {
      for (auto [p, e] : factorize(i)) {
        const auto idx = std::lower_bound(primes_.begin(), primes_.end(), p) - primes_.begin();
        part_factors_[i].push_back(
            {static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(e)});
      }
    }
  }

  FactoredNatural run() {
    visit_node();  // empty multiset
    if (c_.max_parts > 0) {
      switch (c_.kind) {
        case PartConstraint::Kind::IntegerSum: dfs_integer(2, c_.integer_budget, 0); break;
        case PartConstraint::Kind::RealSum: dfs_real(2, c_.real_budget, 0); break;
        case PartConstraint::Kind::Product: dfs_product(2, c_.product_cap, 0); break;
      }
    }
    FactoredBuilder builder;
    for (std::size_t i = 0; i < primes_.size(); ++i) builder.push(primes_[i], best_[i]);
    return std::move(builder).build();
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t largest_part() const {
    switch (c_.kind) {
      case PartConstraint::Kind::IntegerSum: {
        std::uint64_t m = 1;
        while (m + 1 < c_.integer_weights.size() &&
               c_.integer_weights[m + 1] <= c_.integer_budget) {
          ++m;
        }
        return m;
      }
      case PartConstraint::Kind::RealSum: {
        std::uint64_t m = 1;
        while (m + 1 < c_.real_weights.size() && c_.real_weights[m + 1] <= c_.real_budget) ++m;
        return m;
      }
      case PartConstraint::Kind::Product:
        return std::max<std::uint64_t>(c_.product_cap, 1);
    }
    return 1;
  }

  void visit_node() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("multiset enumeration exceeded its budget of " +
                           std::to_string(budget_) + " nodes");
    }
  }

  void push(std::uint64_t part) {
    for (const auto& f : part_factors_[part]) {
      current_[f.prime_index] += f.exponent;
      best_[f.prime_index] = std::max(best_[f.prime_index], current_[f.prime_index]);
    }
  }

  void pop(std::uint64_t part) {
    for (const auto& f : part_factors_[part]) current_[f.prime_index] -= f.exponent;
  }

  void dfs_integer(std::uint64_t first, std::uint64_t remaining, std::uint64_t depth) {
    for (std::uint64_t part = first; part <= max_part_; ++part) {
      const std::uint64_t w = c_.integer_weights[part];
      if (w > remaining) break;
      visit_node();
      push(part);
      if (depth + 1 < c_.max_parts) dfs_integer(part, remaining - w, depth + 1);
      pop(part);
    }
  }

  void dfs_real(std::uint64_t first, double remaining, std::uint64_t depth) {
    for (std::uint64_t part = first; part <= max_part_; ++part) {
      const double w = c_.real_weights[part];
      if (w > remaining) break;
      visit_node();
      push(part);
      if (depth + 1 < c_.max_parts) dfs_real(part, remaining - w, depth + 1);
      pop(part);
    }
  }

  // `quota` is floor(cap / product so far); a part fits iff part <= quota.
  void dfs_product(std::uint64_t first, std::uint64_t quota, std::uint64_t depth) {
    for (std::uint64_t part = first; part <= quota; ++part) {
      visit_node();
      push(part);
      if (depth + 1 < c_.max_parts) dfs_product(part, quota / part, depth + 1);
      pop(part);
    }
  }

  const PartConstraint& c_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_part_ = 1;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint64_t> current_;
  std::vector<std::uint64_t> best_;
  std::vector<std::vector<PartFactor>> part_factors_;
};

}  // namespace

FactoredNatural lcm_of_part_products(const PartConstraint& constraint,
                                     std::uint64_t node_budget, SearchStats* stats) {
  Search search(constraint, node_budget);
  auto result = search.run();
  if (stats) stats->nodes_visited = search.nodes();
  return result;
}

}  // namespace lcmf
