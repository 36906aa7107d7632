#include "pvs/geometry.hpp"

#include <stdexcept>
#include <utility>

#include "pvs/simplex.hpp"

namespace pvs {

std::vector<std::size_t> rref(std::vector<RVector>& matrix) {
  std::vector<std::size_t> pivots;
  if (matrix.empty()) return pivots;
  const std::size_t rows = matrix.size();
  const std::size_t cols = matrix.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && matrix[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(matrix[p], matrix[r]);
    const Rat inv = matrix[r][c];
    for (Rat& v : matrix[r]) v /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || matrix[i][c] == 0) continue;
      const Rat f = matrix[i][c];
      for (std::size_t j = 0; j < cols; ++j) matrix[i][j] -= f * matrix[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(std::vector<RVector> matrix) { return rref(matrix).size(); }

std::vector<RVector> kernel(std::vector<RVector> matrix) {
  std::vector<RVector> basis;
  if (matrix.empty()) return basis;
  const std::size_t cols = matrix.front().size();
  const std::vector<std::size_t> pivots = rref(matrix);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector x(cols, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -matrix[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

PositiveCombination positive_combination_impl(
    const std::vector<RVector>& points) {
  if (points.empty()) throw std::invalid_argument("no points");
  const std::size_t d = points.front().size();
  if (d == 0) throw std::invalid_argument("zero-dimensional points");
  for (const RVector& v : points) {
    if (v.size() != d) throw std::invalid_argument("mixed dimensions");
  }

  PositiveCombination out;

  // Points that do not span land in a hyperplane; any kernel vector of the
  // point matrix is orthogonal to every point and separates.
  if (rank(points) < d) {
    out.interior = false;
    out.separator = kernel(points).front();
    return out;
  }

  // Spanning case. A strictly positive zero-combination exists iff there is
  // one with every coefficient >= 1, so solve sum_p u_p v_p = -sum_p v_p with
  // u >= 0 and shift back by one.
  lp::Problem prob;
  prob.rows.assign(d, RVector(points.size(), Rat(0)));
  prob.rhs.assign(d, Rat(0));
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t i = 0; i < d; ++i) {
      prob.rows[i][p] = points[p][i];
      prob.rhs[i] -= points[p][i];
    }
  }
  const lp::Solution sol = lp::maximize(prob);
  if (sol.status == lp::Status::Optimal) {
    out.interior = true;
    out.coefficients.resize(points.size());
    Rat total = 0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      out.coefficients[p] = sol.x[p] + 1;
      total += out.coefficients[p];
    }
    for (Rat& c : out.coefficients) c /= total;
    return out;
  }
  // Farkas dual of the feasibility system: <l, v_p> <= 0 for every p with a
  // strictly negative total, hence a genuine separator.
  out.interior = false;
  out.separator = sol.farkas;
  return out;
}

}  // namespace

PositiveCombination positive_combination(const std::vector<RVector>& points) {
  PositiveCombination out = positive_combination_impl(points);
  // Every certificate is re-validated before it leaves the solver, so a
  // downstream consumer can trust either branch unconditionally.
  if (!check_positive_combination(points, out)) {
    throw std::logic_error("unsound interiority certificate");
  }
  return out;
}

bool contains_origin_interior(const std::vector<RVector>& points) {
  if (points.empty()) return false;
  return positive_combination(points).interior;
}

bool check_positive_combination(const std::vector<RVector>& points,
                                const PositiveCombination& claim) {
  if (points.empty()) return false;
  const std::size_t d = points.front().size();
  if (claim.interior) {
    if (claim.coefficients.size() != points.size()) return false;
    Rat total = 0;
    RVector combo(d, Rat(0));
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (claim.coefficients[p] <= 0) return false;
      total += claim.coefficients[p];
      for (std::size_t i = 0; i < d; ++i) {
        combo[i] += claim.coefficients[p] * points[p][i];
      }
    }
    return total == 1 && is_zero(combo) && rank(points) == d;
  }
  if (claim.separator.size() != d || is_zero(claim.separator)) return false;
  for (const RVector& v : points) {
    if (dot(claim.separator, v) > 0) return false;
  }
  return true;
}

ConeWitness strict_cone_feasible(const std::vector<RVector>& points) {
  ConeWitness out;
  if (points.empty()) return out;
  const std::size_t d = points.front().size();
  for (const RVector& v : points) {
    if (v.size() != d) throw std::invalid_argument("mixed dimensions");
  }
  const std::size_t n = points.size();

  // Maximize t subject to sum_p w_p v_p >= t * (1,...,1), w in the simplex.
  // Columns: w_1..w_n, t+, t-, one slack per coordinate.
  lp::Problem prob;
  prob.rows.assign(d + 1, RVector(n + 2 + d, Rat(0)));
  prob.rhs.assign(d + 1, Rat(0));
  prob.objective.assign(n + 2 + d, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t p = 0; p < n; ++p) prob.rows[i][p] = points[p][i];
    prob.rows[i][n] = -1;
    prob.rows[i][n + 1] = 1;
    prob.rows[i][n + 2 + i] = -1;
  }
  for (std::size_t p = 0; p < n; ++p) prob.rows[d][p] = 1;
  prob.rhs[d] = 1;
  prob.objective[n] = 1;
  prob.objective[n + 1] = -1;

  const lp::Solution sol = lp::maximize(prob);
  if (sol.status != lp::Status::Optimal) {
    throw std::logic_error("cone program must have an optimum");
  }
  out.margin = sol.objective;
  out.strict = out.margin > 0;
  out.weights.assign(sol.x.begin(), sol.x.begin() + n);
  return out;
}

bool check_cone_witness(const std::vector<RVector>& points,
                        const ConeWitness& claim) {
  if (!claim.strict || claim.margin <= 0) return false;
  if (points.empty() || claim.weights.size() != points.size()) return false;
  const std::size_t d = points.front().size();
  Rat total = 0;
  RVector combo(d, Rat(0));
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (claim.weights[p] < 0) return false;
    total += claim.weights[p];
    for (std::size_t i = 0; i < d; ++i) {
      combo[i] += claim.weights[p] * points[p][i];
    }
  }
  if (total != 1) return false;
  for (const Rat& v : combo) {
    if (v < claim.margin) return false;
  }
  return true;
}

RVector solve_plane_combination(const Rat& a, const Rat& b) {
  // Generators; the kernel of the 2x3 system is spanned by (1,1,1), so the
  // minimal-sum nonnegative solution zeroes at least one coefficient. Try all
  // three supports and keep the cheapest nonnegative one.
  static const Rat u[3][2] = {
      {Rat(-1, 3), Rat(-2, 3)},
      {Rat(-1, 3), Rat(1, 3)},
      {Rat(2, 3), Rat(1, 3)},
  };
  bool found = false;
  RVector best;
  Rat best_sum;
  for (int skip = 0; skip < 3; ++skip) {
    const int i = skip == 0 ? 1 : 0;
    const int j = skip == 2 ? 1 : 2;
    const Rat det = u[i][0] * u[j][1] - u[j][0] * u[i][1];
    if (det == 0) continue;
    const Rat ci = (a * u[j][1] - u[j][0] * b) / det;
    const Rat cj = (u[i][0] * b - a * u[i][1]) / det;
    if (ci < 0 || cj < 0) continue;
    RVector c(3, Rat(0));
    c[i] = ci;
    c[j] = cj;
    const Rat sum = ci + cj;
    if (!found || sum < best_sum) {
      found = true;
      best = c;
      best_sum = sum;
    }
  }
  if (!found) throw std::logic_error("point not in the nonnegative span");
  return best;
}

}  // namespace pvs
