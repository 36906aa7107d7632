#include <doctest.h>

#include "pvs/rng.hpp"
#include "pvs/simplex.hpp"

using namespace pvs;
using lp::Problem;
using lp::Solution;
using lp::Status;

namespace {

RVector rv(std::initializer_list<int> vals) {
  RVector out;
  for (int v : vals) out.emplace_back(v);
  return out;
}

// A x for the row-major constraint matrix.
RVector matvec(const std::vector<RVector>& rows, const RVector& x) {
  RVector out;
  for (const RVector& r : rows) out.push_back(dot(r, x));
  return out;
}

}  // namespace

TEST_SUITE("simplex") {

TEST_CASE("two-variable optimum with slacks") {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6.
  Problem p;
  p.rows = {rv({1, 1, 1, 0}), rv({1, 3, 0, 1})};
  p.rhs = rv({4, 6});
  p.objective = rv({3, 2, 0, 0});
  Solution s = lp::maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 12);
  CHECK(s.x[0] == 4);
  CHECK(s.x[1] == 0);
}

TEST_CASE("negative rhs handled by row normalization") {
  // x1 - x2 = -1, x >= 0, max -x2 -> x = (0,1).
  Problem p;
  p.rows = {rv({1, -1})};
  p.rhs = rv({-1});
  p.objective = rv({0, -1});
  Solution s = lp::maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == -1);
  CHECK(s.x[0] == 0);
  CHECK(s.x[1] == 1);
}

TEST_CASE("infeasible system yields a valid certificate") {
  // x1 + x2 = -1 has no nonnegative solution.
  Problem p;
  p.rows = {rv({1, 1})};
  p.rhs = rv({-1});
  Solution s = lp::maximize(p);
  REQUIRE(s.status == Status::Infeasible);
  REQUIRE(s.farkas.size() == 1);
  // farkas . A_j <= 0 and farkas . b > 0.
  CHECK(s.farkas[0] <= 0);
  CHECK(s.farkas[0] * p.rhs[0] > 0);
}

TEST_CASE("unbounded directions are reported") {
  Problem p;  // max x with no constraints
  p.objective = rv({1});
  CHECK(lp::maximize(p).status == Status::Unbounded);

  Problem q;  // max x, x - y = 0
  q.rows = {rv({1, -1})};
  q.rhs = rv({0});
  q.objective = rv({1, 0});
  CHECK(lp::maximize(q).status == Status::Unbounded);
}

TEST_CASE("redundant rows are tolerated") {
  // Same constraint twice plus its negation-free copy.
  Problem p;
  p.rows = {rv({1, 1}), rv({1, 1}), rv({2, 2})};
  p.rhs = rv({2, 2, 4});
  p.objective = rv({1, 0});
  Solution s = lp::maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 2);
}

TEST_CASE("Beale cycling instance terminates under Bland") {
  // max 3/4 x1 - 150 x2 + 1/50 x3 - 6 x4 with the classical degenerate rows;
  // cycles under largest-coefficient pivoting, Bland must reach 1/20.
  Problem p;
  p.rows.assign(3, RVector(7, Rat(0)));
  RVector r0 = {Rat(1, 4), Rat(-60), Rat(-1, 25), Rat(9), Rat(1), Rat(0),
                Rat(0)};
  RVector r1 = {Rat(1, 2), Rat(-90), Rat(-1, 50), Rat(3), Rat(0), Rat(1),
                Rat(0)};
  RVector r2 = {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)};
  p.rows = {r0, r1, r2};
  p.rhs = {Rat(0), Rat(0), Rat(1)};
  p.objective = {Rat(3, 4), Rat(-150), Rat(1, 50), Rat(-6),
                 Rat(0),    Rat(0),    Rat(0)};
  Solution s = lp::maximize(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == Rat(1, 20));
}

TEST_CASE("fuzz: every verdict is internally consistent") {
  Rng rng = stream(20240601, "simplex-fuzz");
  int optimal = 0, infeasible = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t m = 1 + rng.below(3);
    const std::size_t n = 1 + rng.below(5);
    Problem p;
    p.rows.assign(m, RVector(n, Rat(0)));
    p.rhs.assign(m, Rat(0));
    p.objective.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        p.rows[i][j] = Rat(rng.range(-3, 3), 1 + rng.below(2));
      }
      p.rhs[i] = Rat(rng.range(-3, 3));
    }
    for (std::size_t j = 0; j < n; ++j) p.objective[j] = Rat(rng.range(-2, 0));
    Solution s = lp::maximize(p);
    if (s.status == Status::Optimal) {
      ++optimal;
      REQUIRE(s.x.size() == n);
      for (const Rat& v : s.x) REQUIRE(v >= 0);
      RVector ax = matvec(p.rows, s.x);
      for (std::size_t i = 0; i < m; ++i) REQUIRE(ax[i] == p.rhs[i]);
      REQUIRE(s.objective == dot(p.objective, s.x));
    } else if (s.status == Status::Infeasible) {
      ++infeasible;
      REQUIRE(s.farkas.size() == m);
      // Certificate: y.A <= 0 columnwise, y.b > 0.
      for (std::size_t j = 0; j < n; ++j) {
        Rat col = 0;
        for (std::size_t i = 0; i < m; ++i) col += s.farkas[i] * p.rows[i][j];
        REQUIRE(col <= 0);
      }
      REQUIRE(dot(s.farkas, p.rhs) > 0);
    }
  }
  // The generator must exercise both verdicts.
  CHECK(optimal > 20);
  CHECK(infeasible > 20);
}

}  // TEST_SUITE
