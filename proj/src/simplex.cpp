#include "pvs/simplex.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace pvs::lp {

namespace {

using Tableau = std::vector<RVector>;

// Pivot at (r, s): scale the pivot row, then eliminate column s from every
// other row and from the z-row.
void pivot(Tableau& tab, RVector& zrow, std::vector<std::size_t>& basis,
           std::size_t r, std::size_t s) {
  const Rat inv = tab[r][s];
  for (Rat& v : tab[r]) v /= inv;
  for (std::size_t i = 0; i < tab.size(); ++i) {
    if (i == r || tab[i][s] == 0) continue;
    const Rat f = tab[i][s];
    for (std::size_t j = 0; j < tab[i].size(); ++j) tab[i][j] -= f * tab[r][j];
  }
  if (zrow[s] != 0) {
    const Rat f = zrow[s];
    for (std::size_t j = 0; j < zrow.size(); ++j) zrow[j] -= f * tab[r][j];
  }
  basis[r] = s;
}

// One Bland step: enter the lowest-index column with negative reduced cost,
// leave on the minimum ratio, ties broken by the lowest basic variable index.
// Returns false at optimality or (with *unbounded set) when the entering
// column has no positive entry.
bool bland_step(Tableau& tab, RVector& zrow, std::vector<std::size_t>& basis,
                bool* unbounded) {
  const std::size_t rhs = zrow.size() - 1;
  std::size_t enter = rhs;
  for (std::size_t j = 0; j < rhs; ++j) {
    if (zrow[j] < 0) {
      enter = j;
      break;
    }
  }
  if (enter == rhs) return false;

  std::size_t leave = tab.size();
  Rat best;
  for (std::size_t i = 0; i < tab.size(); ++i) {
    if (tab[i][enter] <= 0) continue;
    Rat ratio = tab[i][rhs] / tab[i][enter];
    if (leave == tab.size() || ratio < best ||
        (ratio == best && basis[i] < basis[leave])) {
      leave = i;
      best = ratio;
    }
  }
  if (leave == tab.size()) {
    *unbounded = true;
    return false;
  }
  pivot(tab, zrow, basis, leave, enter);
  return true;
}

}  // namespace

Solution maximize(const Problem& problem) {
  const std::size_t m = problem.rows.size();
  const std::size_t n =
      m ? problem.rows.front().size() : problem.objective.size();
  for (const RVector& row : problem.rows) {
    if (row.size() != n) throw std::invalid_argument("lp: ragged matrix");
  }
  if (problem.rhs.size() != m) throw std::invalid_argument("lp: rhs size");
  if (!problem.objective.empty() && problem.objective.size() != n) {
    throw std::invalid_argument("lp: objective size");
  }
  RVector cost(n, Rat(0));
  for (std::size_t j = 0; j < problem.objective.size(); ++j) {
    cost[j] = problem.objective[j];
  }

  // Phase one: rows sign-normalized so b >= 0, one artificial per row,
  // maximize minus the artificial sum.
  Tableau tab(m, RVector(n + m + 1, Rat(0)));
  std::vector<int> row_sign(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.rhs[i] < 0) row_sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) {
      tab[i][j] =
          row_sign[i] < 0 ? Rat(-problem.rows[i][j]) : problem.rows[i][j];
    }
    tab[i][n + i] = 1;
    tab[i][n + m] = row_sign[i] < 0 ? Rat(-problem.rhs[i]) : problem.rhs[i];
    basis[i] = n + i;
  }
  RVector zrow(n + m + 1, Rat(0));
  for (std::size_t j = 0; j <= n + m; ++j) {
    Rat acc = 0;
    for (std::size_t i = 0; i < m; ++i) acc += tab[i][j];
    zrow[j] = -acc;
  }
  for (std::size_t i = 0; i < m; ++i) zrow[n + i] += 1;

  bool unbounded = false;
  while (bland_step(tab, zrow, basis, &unbounded)) {
  }
  if (unbounded) throw std::logic_error("lp: phase one unbounded");

  if (zrow[n + m] < 0) {
    // The z-row over the artificial block holds the dual vector that proves
    // infeasibility; undo the row sign normalization and flip so that
    // farkas . A_j <= 0 for all j while farkas . b > 0.
    Solution out;
    out.status = Status::Infeasible;
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rat y = zrow[n + i] - 1;
      out.farkas[i] = row_sign[i] < 0 ? y : Rat(-y);
    }
    return out;
  }

  // Feasible: every artificial sits at zero. Pivot basic artificials onto a
  // structural column when possible; rows where none exists are redundant
  // constraints and are dropped along with the whole artificial block.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab[i][j] != 0) {
        pivot(tab, zrow, basis, i, j);
        break;
      }
    }
  }
  Tableau t2;
  std::vector<std::size_t> basis2;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) continue;
    RVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = tab[i][j];
    row[n] = tab[i][n + m];
    t2.push_back(std::move(row));
    basis2.push_back(basis[i]);
  }

  // Phase two on the reduced tableau with the real objective.
  RVector z2(n + 1, Rat(0));
  for (std::size_t j = 0; j <= n; ++j) {
    Rat acc = 0;
    for (std::size_t i = 0; i < t2.size(); ++i) {
      acc += cost[basis2[i]] * t2[i][j];
    }
    z2[j] = acc;
  }
  for (std::size_t j = 0; j < n; ++j) z2[j] -= cost[j];

  unbounded = false;
  while (bland_step(t2, z2, basis2, &unbounded)) {
  }
  if (unbounded) {
    Solution out;
    out.status = Status::Unbounded;
    return out;
  }

  Solution out;
  out.status = Status::Optimal;
  out.objective = z2[n];
  out.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < t2.size(); ++i) out.x[basis2[i]] = t2[i][n];
  return out;
}

}  // namespace pvs::lp
