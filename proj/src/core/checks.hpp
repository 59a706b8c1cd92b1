#ifndef MODAN_CHECKS_HPP
#define MODAN_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "module.hpp"

namespace modan {

enum class CheckStatus { pass, fail, skip };

const char* to_string(CheckStatus s);

/// One verified property. `tag` is a stable dotted identifier, `detail`
/// says what was verified, why it was skipped, or the failure witness.
struct CheckResult {
  std::string tag;
  CheckStatus status;
  std::string detail;
};

struct CheckOptions {
  std::size_t q_max = 3;
  std::uint64_t seed = 0;
};

/// Runs the whole property registry on a workspace: structural axioms,
/// multiplier/derivation subspace laws, bundle geometry, gauge identities,
/// and the two cohomology calculi, on basis elements plus seeded random
/// samples. Results are sorted by tag and deterministic for a fixed seed.
std::vector<CheckResult> run_checks(const Algebra& algebra,
                                    const std::optional<Module>& module,
                                    const CheckOptions& options);

}  // namespace modan

#endif
