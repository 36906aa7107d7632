#pragma once

#include <vector>

#include "pvs/rational.hpp"

namespace pvs::lp {

enum class Status { Optimal, Infeasible, Unbounded };

/// maximize c.x  subject to  A x = b,  x >= 0.
/// Internal building block for the certificate searches; not a general solver.
struct Problem {
  std::vector<RVector> rows;  // A, one vector per constraint
  RVector rhs;                // b
  RVector objective;          // c (empty means pure feasibility)
};

struct Solution {
  Status status = Status::Infeasible;
  Rat objective;  // valid when Optimal
  RVector x;      // valid when Optimal
  /// Farkas certificate, valid when Infeasible:
  ///   farkas . A_j <= 0 for every column j, and farkas . b > 0.
  RVector farkas;
};

/// Two-phase dense tableau simplex over exact rationals, Bland's rule
/// throughout, hence deterministic and cycle-free.
Solution maximize(const Problem& problem);

}  // namespace pvs::lp
