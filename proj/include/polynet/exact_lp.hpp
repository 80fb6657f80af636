#pragma once

#include <vector>

#include "polynet/exact_math.hpp"

namespace polynet {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  ///< optimum of c.x when Optimal
  RatVector x;     ///< an optimal vertex when Optimal
};

/// maximize c.x subject to A x = b, x >= 0, in exact arithmetic.
/// Two-phase dense tableau simplex with Bland's rule (terminates on degenerate problems).
LpResult solve_lp(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c);

}  // namespace polynet
