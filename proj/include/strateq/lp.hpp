#pragma once

#include <optional>
#include <vector>

#include "strateq/matrix.hpp"

namespace strateq {

/// Primal solution, optimal objective and the dual vector of
///   max c^T x  s.t.  A x <= b,  x >= 0
/// solved by exact rational tableau simplex with Bland's anticycling rule.
struct SimplexResult {
  Rational objective;
  RatVector x;
  RatVector dual;  // one multiplier per <= row, read off the final tableau
};

/// Requires b >= 0 entrywise (the slack basis is then feasible). Throws
/// std::invalid_argument on bad shapes and std::runtime_error if the
/// program is unbounded.
SimplexResult simplex_max(const std::vector<RatVector>& a_rows, const RatVector& b,
                          const RatVector& c);

/// Finds any x >= 0 with eq_rows * x = eq_rhs and le_rows * x <= le_rhs via
/// a phase-1 simplex, or nothing when the system is infeasible. Requires
/// le_rhs >= 0 entrywise.
std::optional<RatVector> find_feasible_point(const std::vector<RatVector>& eq_rows,
                                             const RatVector& eq_rhs,
                                             const std::vector<RatVector>& le_rows,
                                             const RatVector& le_rhs, int num_vars);

}  // namespace strateq
