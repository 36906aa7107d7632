#pragma once

// Helpers shared by the unit tests and the acceptance runner.

#include <cstddef>
#include <vector>

#include "pvs/rational.hpp"
#include "pvs/rng.hpp"
#include "pvs/simplex.hpp"

namespace testsupport {

inline pvs::Rat random_rat(pvs::Rng& rng, int span = 3, int max_den = 4) {
  return pvs::Rat(rng.range(-span, span), 1 + rng.below(max_den));
}

inline pvs::RVector random_vector(pvs::Rng& rng, std::size_t dim) {
  pvs::RVector v(dim);
  for (auto& x : v) x = random_rat(rng);
  return v;
}

// Independent search for a nonzero functional l with <l, v> <= 0 for every
// point v. Maximizes each signed coordinate of l over the polar cone
// intersected with the unit box; any positive optimum exposes a separator.
// Returns an empty vector when only l = 0 qualifies, i.e. when the points
// positively span the whole space.
inline pvs::RVector weak_separator_search(
    const std::vector<pvs::RVector>& points) {
  using namespace pvs;
  const std::size_t d = points.front().size();
  const std::size_t n = points.size();
  // Columns: l+ (d), l- (d), point slacks (n), box slacks (2d).
  const std::size_t cols = 2 * d + n + 2 * d;
  lp::Problem prob;
  prob.rows.assign(n + 2 * d, RVector(cols, Rat(0)));
  prob.rhs.assign(n + 2 * d, Rat(0));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < d; ++i) {
      prob.rows[p][i] = points[p][i];
      prob.rows[p][d + i] = -points[p][i];
    }
    prob.rows[p][2 * d + p] = 1;
  }
  for (std::size_t i = 0; i < 2 * d; ++i) {
    prob.rows[n + i][i] = 1;
    prob.rows[n + i][2 * d + n + i] = 1;
    prob.rhs[n + i] = 1;
  }
  for (std::size_t trial = 0; trial < 2 * d; ++trial) {
    prob.objective.assign(cols, Rat(0));
    const std::size_t coord = trial % d;
    prob.objective[coord] = trial < d ? 1 : -1;
    prob.objective[d + coord] = trial < d ? -1 : 1;
    const lp::Solution sol = lp::maximize(prob);
    if (sol.status == lp::Status::Optimal && sol.objective > 0) {
      RVector l(d);
      for (std::size_t i = 0; i < d; ++i) l[i] = sol.x[i] - sol.x[d + i];
      return l;
    }
  }
  return {};
}

}  // namespace testsupport
