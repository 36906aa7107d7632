#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvs/geometry.hpp"
#include "pvs/pencils.hpp"
#include "pvs/weights.hpp"

namespace pvs {

// ---------------------------------------------------------------------------
// Stratum definitions.  For the rank-two alternating case the three strata
// partition the distinguished locus; for the rank-three alternating case the
// sixteen predicates (indices 1, 2, 4..13, 15..18; 3 and 14 are intermediate
// supersets, not partition members) partition the semistable set.

struct StratumId {
  CaseId case_id = CaseId::Case3_D5;
  int index = 1;

  bool operator==(const StratumId&) const = default;
  auto operator<=>(const StratumId&) const = default;
};

std::string stratum_label(const StratumId& id);  // "L7"

/// A vanishing/nonvanishing predicate on pencil coordinates: every listed
/// zero coordinate must vanish, and each nonzero clause must contain at least
/// one nonvanishing coordinate.
struct VanishingCondition {
  std::vector<CoordinateId> zero;
  std::vector<std::vector<CoordinateId>> nonzero;
};

/// The partition predicates for a case, keyed by stratum index.
const std::vector<std::pair<int, VanishingCondition>>& stratum_conditions(
    CaseId case_id);

/// The coordinates occurring anywhere in a case's stratum predicates, in a
/// fixed order (used for the symbolic pattern checks).
const std::vector<CoordinateId>& stratum_alphabet(CaseId case_id);

template <class F>
bool matches_condition(const MatrixPencil<F>& x, const VanishingCondition& c) {
  for (const auto& z : c.zero)
    if (!ring_is_zero(get_coordinate(x, z))) return false;
  for (const auto& clause : c.nonzero) {
    bool some = false;
    for (const auto& nz : clause)
      if (!ring_is_zero(get_coordinate(x, nz))) {
        some = true;
        break;
      }
    if (!some) return false;
  }
  return true;
}

struct ClassificationError : std::runtime_error {
  explicit ClassificationError(const std::string& what, nlohmann::ordered_json p)
      : std::runtime_error(what), pencil(std::move(p)) {}
  nlohmann::ordered_json pencil;
};

/// Classifies a pencil into its stratum.  Assumes the case precondition
/// (membership in the distinguished locus resp. semistability); throws
/// ClassificationError if no predicate matches and logic_error if several do.
template <class F>
StratumId stratum_of(const MatrixPencil<F>& x) {
  if (x.case_id != CaseId::Case3_D5 && x.case_id != CaseId::Case4_E7)
    throw std::invalid_argument("stratum_of: case has no stratification");
  int found = 0;
  int index = 0;
  for (const auto& [i, cond] : stratum_conditions(x.case_id)) {
    if (matches_condition(x, cond)) {
      ++found;
      index = i;
    }
  }
  if (found == 0)
    throw ClassificationError("no stratum matches",
                              pencil_to_json(PencilVariant{x}));
  if (found > 1) throw std::logic_error("stratum predicates overlap");
  return StratumId{x.case_id, index};
}

// ---------------------------------------------------------------------------
// Sampling configuration and reports.

struct SampleConfig {
  std::uint32_t prime = 2;
  bool exhaustive = false;
  std::uint64_t sample_count = 100000;  // draws before filtering
  std::uint64_t seed = 20240601;
};

struct ClaimReport {
  std::string claim;
  std::uint32_t prime = 2;
  std::string mode;  // "exhaustive" or "random"
  std::uint64_t seed = 0;
  std::uint64_t tested = 0;
  std::vector<nlohmann::ordered_json> violations;
  std::map<std::string, std::uint64_t> stratum_counts;
};

nlohmann::ordered_json claim_report_to_json(const ClaimReport& r);

/// Checks that the sampled/enumerated pencils satisfying the case
/// precondition land in exactly one stratum.  Exhaustive mode requires
/// prime^(coordinate count) <= 2^24.
ClaimReport verify_partition(CaseId case_id, const SampleConfig& cfg);

/// A nonvanishing claim: under the hypothesis conditions (and semistability),
/// every conclusion clause must contain a nonvanishing coordinate.  The
/// claims named "claim2".."claim11" are the displayed ones; the "gap-..."
/// entries close the case analysis between consecutive strata and are the
/// coverage axioms of the symbolic partition check.
struct ClaimSpec {
  std::string id;
  std::vector<std::string> hypothesis_labels;  // parallel to hypotheses
  std::vector<VanishingCondition> hypotheses;
  std::vector<std::vector<CoordinateId>> conclusion;
};

const std::vector<ClaimSpec>& nonvanishing_claims();  // fixed order
const ClaimSpec& claim_by_id(const std::string& id);

template <class F>
bool claim_conclusion_holds(const ClaimSpec& spec, const MatrixPencil<F>& x) {
  for (const auto& clause : spec.conclusion) {
    bool some = false;
    for (const auto& c : clause)
      if (!ring_is_zero(get_coordinate(x, c))) {
        some = true;
        break;
      }
    if (!some) return false;
  }
  return true;
}

/// Conditioned verification of one claim: for each hypothesis condition the
/// forced zeros are fixed, the remaining coordinates drawn uniformly, and the
/// filter keeps pencils that satisfy the hypothesis and are semistable.
ClaimReport verify_claim(const ClaimSpec& spec, const SampleConfig& cfg);
ClaimReport verify_claim(int claim_number, const SampleConfig& cfg);  // 2..11

// ---------------------------------------------------------------------------
// Symbolic checks over vanishing patterns: disjointness of the predicates is
// unconditional; coverage holds modulo the gap claims taken as axioms.

struct SymbolicPartitionReport {
  bool disjoint = false;
  bool covered = false;
  std::uint64_t patterns = 0;
  std::vector<std::string> problems;
};

SymbolicPartitionReport symbolic_partition_check(CaseId case_id);

// ---------------------------------------------------------------------------
// Constructive stability witnesses for the square cases: a convex combination
// of the weight vectors of nonvanishing coordinates with entrywise positive
// sum certifies that the convex hull meets the positive cone's interior.

struct StabilityWitness {
  std::vector<CoordinateId> support;  // nonvanishing coordinates, fixed order
  ConeWitness cone;                   // cone.weights aligned with support
};

/// The weight vectors entering the witness for a coordinate set.
std::vector<RVector> stability_points(CaseId case_id,
                                      const std::vector<CoordinateId>& support);

template <class F>
StabilityWitness k_stable_witness(const MatrixPencil<F>& x) {
  if (x.case_id != CaseId::Case1_D4 && x.case_id != CaseId::Case2_E6)
    throw std::invalid_argument("stability witness: square cases only");
  StabilityWitness w;
  for (const auto& c : coordinates(x.case_id))
    if (!ring_is_zero(get_coordinate(x, c))) w.support.push_back(c);
  const auto points = stability_points(x.case_id, w.support);
  // Shortcut: a single entrywise-positive weight vector is its own witness.
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rat least;
    bool positive = !points[i].empty();
    for (std::size_t l = 0; l < points[i].size(); ++l) {
      if (points[i][l] <= 0) {
        positive = false;
        break;
      }
      if (l == 0 || points[i][l] < least) least = points[i][l];
    }
    if (positive) {
      w.support = {w.support[i]};
      w.cone.strict = true;
      w.cone.margin = least;
      w.cone.weights = {Rat(1)};
      return w;
    }
  }
  w.cone = strict_cone_feasible(points);
  if (!w.cone.strict)
    throw std::logic_error(
        "stability witness infeasible for a distinguished-locus member");
  return w;
}

struct StabilitySweepReport {
  std::uint64_t total = 0;       // pencils enumerated
  std::uint64_t locus = 0;       // distinguished-locus members
  std::uint64_t witnessed = 0;   // members with a validated witness
  std::vector<nlohmann::ordered_json> failures;
};

/// Exhaustive sweep over all pencils of a square case with entries in F_p:
/// every distinguished-locus member must admit a validated witness.  Work is
/// split across threads by index range; results merge in index order.
StabilitySweepReport stability_sweep(CaseId case_id, std::uint32_t prime,
                                     std::size_t threads);

}  // namespace pvs
