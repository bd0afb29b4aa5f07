#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcmf/multiset_search.hpp"
#include "lcmf/pif.hpp"

namespace lcmf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Exit codes: 0 success
/// or pass, 1 verification failure or runtime error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::optional<std::uint64_t> nmax;
  std::optional<double> xmax;
  std::optional<std::string> f;
  std::uint64_t budget = kDefaultNodeBudget;
  /// theorem2 only: ValuationRecord CSV destination.
  std::optional<std::string> out;
};

struct VerifyResult {
  std::string id;
  std::uint64_t cases = 0;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
};

const std::vector<std::string>& verify_ids();

/// Throws std::invalid_argument for an unknown id or bad options.
VerifyResult verify(std::string_view id, const VerifyOptions& options);

/// x values checked for f: 0 to xmax in steps of 0.5 (0.1 for log, plus every
/// log m <= xmax).
std::vector<double> theorem1_grid(const WeightFunction& f, double xmax);

/// Default xmax for f: 18 for m and m-1, 12 for powers, log 40 for log.
double theorem1_default_xmax(const WeightFunction& f);

}  // namespace lcmf::cli
