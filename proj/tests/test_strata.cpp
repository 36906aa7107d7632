#include <doctest.h>

#include <set>

#include "pvs/rng.hpp"
#include "pvs/strata.hpp"

using namespace pvs;

namespace {

MatrixPencil<Fp> pencil_with(CaseId id, std::uint32_t p,
                             const std::vector<CoordinateId>& nonzero) {
  MatrixPencil<Fp> x = zero_pencil(id, Fp(0, p));
  for (const auto& c : nonzero) set_coordinate(x, c, Fp(1, p));
  return x;
}

}  // namespace

TEST_SUITE("strata") {

TEST_CASE("stratum tables have the expected shape") {
  const auto& case3 = stratum_conditions(CaseId::Case3_D5);
  CHECK(case3.size() == 3);
  const auto& case4 = stratum_conditions(CaseId::Case4_E7);
  CHECK(case4.size() == 16);
  std::set<int> indices;
  for (const auto& [i, cond] : case4) indices.insert(i);
  // Indices 3 and 14 are intermediate supersets, not partition members.
  const std::set<int> expected = {1, 2, 4, 5, 6, 7, 8,
                                  9, 10, 11, 12, 13, 15, 16, 17, 18};
  CHECK(indices == expected);
  CHECK_THROWS_AS(stratum_conditions(CaseId::Case1_D4), std::invalid_argument);

  CHECK(stratum_alphabet(CaseId::Case3_D5).size() == 2);
  CHECK(stratum_alphabet(CaseId::Case4_E7).size() == 14);

  // Spot-check one deep predicate in full: the final stratum requires the
  // eleven inherited zeros and both of its nonvanishing coordinates.
  for (const auto& [i, cond] : case4) {
    if (i != 18) continue;
    CHECK(cond.zero.size() == 11);
    REQUIRE(cond.nonzero.size() == 2);
    CHECK(cond.nonzero[0] == std::vector<CoordinateId>{CoordinateId{1, 6, 3}});
    CHECK(cond.nonzero[1] == std::vector<CoordinateId>{CoordinateId{1, 5, 4}});
  }
}

TEST_CASE("classification follows the documented examples") {
  // Rank-two alternating case, over the rationals as a spot check.
  MatrixPencil<Rat> a = zero_pencil(CaseId::Case3_D5, Rat(0));
  set_coordinate(a, CoordinateId{1, 2, 1}, Rat(5, 2));
  set_coordinate(a, CoordinateId{1, 4, 3}, Rat(-1));
  CHECK(stratum_of(a) == StratumId{CaseId::Case3_D5, 1});

  MatrixPencil<Rat> b = zero_pencil(CaseId::Case3_D5, Rat(0));
  set_coordinate(b, CoordinateId{1, 3, 1}, Rat(1));
  CHECK(stratum_of(b) == StratumId{CaseId::Case3_D5, 2});

  MatrixPencil<Rat> c = zero_pencil(CaseId::Case3_D5, Rat(0));
  set_coordinate(c, CoordinateId{1, 3, 2}, Rat(1));
  CHECK(stratum_of(c) == StratumId{CaseId::Case3_D5, 3});
  CHECK(stratum_label(stratum_of(c)) == "L3");

  // Rank-three case: first coordinates vanish, x_{1,32} nonzero -> second
  // stratum.
  const auto d = pencil_with(CaseId::Case4_E7, 2,
                             {CoordinateId{1, 3, 2}, CoordinateId{2, 2, 1}});
  CHECK(stratum_of(d) == StratumId{CaseId::Case4_E7, 2});

  // A pencil violating the precondition can fail to match anything.
  const auto zero = zero_pencil(CaseId::Case4_E7, Fp(0, 2));
  CHECK_THROWS_AS(stratum_of(zero), ClassificationError);
  try {
    stratum_of(zero);
  } catch (const ClassificationError& e) {
    CHECK(e.pencil.at("case") == 4);
  }

  CHECK_THROWS_AS(stratum_of(zero_pencil(CaseId::Case1_D4, Rat(0))),
                  std::invalid_argument);
}

TEST_CASE("predicates are symbolically disjoint and cover modulo gap axioms") {
  const auto case3 = symbolic_partition_check(CaseId::Case3_D5);
  CHECK(case3.disjoint);
  CHECK(case3.covered);
  CHECK(case3.patterns == 4);
  CHECK(case3.problems.empty());

  const auto case4 = symbolic_partition_check(CaseId::Case4_E7);
  CHECK(case4.disjoint);
  CHECK(case4.covered);
  CHECK(case4.patterns == 16384);
  if (!case4.problems.empty()) {
    for (const auto& p : case4.problems) MESSAGE(p);
  }
  CHECK(case4.problems.empty());
}

TEST_CASE("exhaustive partition of the rank-two case over F_2") {
  SampleConfig cfg;
  cfg.prime = 2;
  cfg.exhaustive = true;
  const ClaimReport r = verify_partition(CaseId::Case3_D5, cfg);
  CHECK(r.mode == "exhaustive");
  CHECK(r.violations.empty());
  // Frozen census of the distinguished locus among the 2^12 pencils.
  CHECK(r.tested == 336);
  CHECK(r.stratum_counts.at("L1") == 192);
  CHECK(r.stratum_counts.at("L2") == 96);
  CHECK(r.stratum_counts.at("L3") == 48);
  std::uint64_t sum = 0;
  for (const auto& [label, count] : r.stratum_counts) sum += count;
  CHECK(sum == r.tested);
}

TEST_CASE("random partition of the rank-three case over F_2") {
  SampleConfig cfg;
  cfg.prime = 2;
  cfg.exhaustive = false;
  cfg.sample_count = 3000;
  cfg.seed = 42;
  const ClaimReport r = verify_partition(CaseId::Case4_E7, cfg);
  CHECK(r.violations.empty());
  CHECK(r.tested > 500);
  // Two runs with the same configuration agree bit for bit.
  const ClaimReport again = verify_partition(CaseId::Case4_E7, cfg);
  CHECK(claim_report_to_json(r).dump() == claim_report_to_json(again).dump());
}

TEST_CASE("nonvanishing claims hold on conditioned samples") {
  const auto& claims = nonvanishing_claims();
  CHECK(claims.size() == 14);  // ten displayed plus four gap axioms
  for (const auto& spec : claims) {
    SampleConfig cfg;
    cfg.prime = 2;
    cfg.sample_count = 1500;
    cfg.seed = 7;
    const ClaimReport r = verify_claim(spec, cfg);
    CHECK(r.claim == spec.id);
    if (!r.violations.empty()) MESSAGE(spec.id, ": ", r.violations[0].dump());
    CHECK(r.violations.empty());
    CHECK(r.tested > 0);
  }

  // The numeric lookup resolves the displayed claims.
  SampleConfig cfg;
  cfg.prime = 3;
  cfg.sample_count = 800;
  cfg.seed = 7;
  const ClaimReport r = verify_claim(4, cfg);
  CHECK(r.claim == "claim4");
  CHECK(r.violations.empty());
  CHECK_THROWS_AS(verify_claim(1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(verify_claim(12, cfg), std::invalid_argument);
  CHECK_THROWS_AS(claim_by_id("nope"), std::invalid_argument);
}

TEST_CASE("the semistability filter is what excludes degenerate patterns") {
  // A pencil matching the seventh stratum's vanishing pattern whose second
  // matrix vanishes identically: its form is v1^3 times a constant, so it is
  // not semistable, and the claim's conclusion indeed fails on it.
  const ClaimSpec& spec = claim_by_id("claim4");
  auto x = pencil_with(CaseId::Case4_E7, 3,
                       {CoordinateId{1, 4, 3}, CoordinateId{1, 6, 2},
                        CoordinateId{1, 5, 3}, CoordinateId{1, 5, 4},
                        CoordinateId{1, 6, 3}});
  CHECK(matches_condition(x, spec.hypotheses.at(0)));
  CHECK_FALSE(claim_conclusion_holds(spec, x));
  CHECK_FALSE(is_semistable(x));
}

TEST_CASE("exhaustive claim verification stays within the size guard") {
  SampleConfig cfg;
  cfg.prime = 2;
  cfg.exhaustive = true;
  // The deepest gap axiom leaves 19 free coordinates: feasible.
  const ClaimReport r = verify_claim(claim_by_id("gap-L18"), cfg);
  CHECK(r.violations.empty());
  CHECK(r.tested == 32768);  // frozen: semistable members of the pattern
  // An unconditioned claim would need 2^30 pencils: rejected.
  CHECK_THROWS_AS(verify_claim(claim_by_id("claim2"), cfg),
                  std::invalid_argument);
}

TEST_CASE("stability witnesses match the documented examples") {
  // All eight coordinates nonzero: the first weight vector is entrywise
  // positive on its own.
  std::vector<Rat> ones(coordinates(CaseId::Case1_D4).size(), Rat(1));
  const auto x = pencil_from_coordinates(CaseId::Case1_D4, ones);
  const StabilityWitness w = k_stable_witness(x);
  REQUIRE(w.support.size() == 1);
  CHECK(w.support[0] == CoordinateId{1, 1, 1});
  CHECK(w.cone.weights == RVector{Rat(1)});
  CHECK(w.cone.margin == Rat(1, 2));
  CHECK(check_cone_witness(stability_points(CaseId::Case1_D4, w.support),
                           w.cone));

  // First coordinate zero, the three named ones nonzero: equal weights.
  MatrixPencil<Rat> y = zero_pencil(CaseId::Case1_D4, Rat(0));
  set_coordinate(y, CoordinateId{1, 1, 2}, Rat(1));
  set_coordinate(y, CoordinateId{1, 2, 1}, Rat(1));
  set_coordinate(y, CoordinateId{2, 1, 1}, Rat(1));
  const StabilityWitness v = k_stable_witness(y);
  REQUIRE(v.support.size() == 3);
  CHECK(v.support == std::vector<CoordinateId>{CoordinateId{1, 1, 2},
                                               CoordinateId{1, 2, 1},
                                               CoordinateId{2, 1, 1}});
  CHECK(v.cone.weights == RVector{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  CHECK(v.cone.margin == Rat(1, 6));
  CHECK(check_cone_witness(stability_points(CaseId::Case1_D4, v.support),
                           v.cone));

  // Degenerate inputs: an empty support cannot be strict, alternating cases
  // are rejected outright.
  CHECK_THROWS_AS(k_stable_witness(zero_pencil(CaseId::Case1_D4, Rat(0))),
                  std::logic_error);
  CHECK_THROWS_AS(k_stable_witness(zero_pencil(CaseId::Case3_D5, Rat(0))),
                  std::invalid_argument);
}

TEST_CASE("exhaustive stability sweep of the smallest case") {
  const StabilitySweepReport r = stability_sweep(CaseId::Case1_D4, 2, 2);
  CHECK(r.total == 256);
  CHECK(r.locus == 12);  // matches the frozen census
  CHECK(r.witnessed == 12);
  CHECK(r.failures.empty());
  // Single-threaded execution reaches the same counts.
  const StabilitySweepReport s = stability_sweep(CaseId::Case1_D4, 2, 1);
  CHECK(s.locus == r.locus);
  CHECK(s.witnessed == r.witnessed);
  CHECK_THROWS_AS(stability_sweep(CaseId::Case3_D5, 2, 1),
                  std::invalid_argument);
}

TEST_CASE("claim reports serialize with the documented keys") {
  SampleConfig cfg;
  cfg.prime = 2;
  cfg.sample_count = 200;
  cfg.seed = 9;
  const ClaimReport r = verify_claim(claim_by_id("claim11"), cfg);
  const auto j = claim_report_to_json(r);
  CHECK(j.at("claim") == "claim11");
  CHECK(j.at("prime") == 2);
  CHECK(j.at("mode") == "random");
  CHECK(j.at("seed") == 9);
  CHECK(j.at("tested") == r.tested);
  CHECK(j.at("violations").is_array());
  CHECK(j.at("stratum_counts").is_object());
  // Hypothesis strata are tallied separately.
  std::uint64_t sum = 0;
  for (const auto& [label, count] : r.stratum_counts) {
    CHECK((label == "L17" || label == "L18"));
    sum += count;
  }
  CHECK(sum == r.tested);
}

}  // TEST_SUITE
