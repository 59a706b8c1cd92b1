#ifndef MODAN_ORACLE_HPP
#define MODAN_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "module.hpp"

namespace modan {

enum class OracleStatus { agree, mismatch, skipped };

const char* to_string(OracleStatus s);

/// One compared quantity. `oracle` is meaningful only when the status is not
/// `skipped` (a degree can be skipped when its naive grid outgrows the cap).
struct OracleRow {
  std::string statement;
  std::size_t primary = 0;
  std::size_t oracle = 0;
  OracleStatus status = OracleStatus::agree;
};

struct OracleOptions {
  std::size_t q_max = 3;
  /// Hard cap on the combined dimensions of all recomputed solution spaces.
  std::size_t dim_cap = 64;
  /// Per-degree cap on the naive grid unknown count; larger grids are skipped.
  std::size_t grid_cap = 2000;
};

/// Recomputes every dimension reported by the primary solvers through a
/// second, deliberately naive path: full-grid constraint enumeration at unit
/// vectors and a from-scratch Gaussian elimination, sharing no solver code
/// with the primary. Throws Error(cap_exceeded) when the combined solution
/// spaces outgrow the configured cap.
std::vector<OracleRow> run_oracle(const Algebra& algebra, const std::optional<Module>& module,
                                  const OracleOptions& options);

}  // namespace modan

#endif
