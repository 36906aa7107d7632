#include "pvs/strata.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "pvs/rng.hpp"

namespace pvs {
namespace {

CoordinateId c1(int j, int k) { return CoordinateId{1, j, k}; }
CoordinateId c2(int j, int k) { return CoordinateId{2, j, k}; }

std::vector<CoordinateId> plus(std::vector<CoordinateId> base,
                               const std::vector<CoordinateId>& more) {
  base.insert(base.end(), more.begin(), more.end());
  return base;
}

// The five coordinates whose vanishing defines the first intermediate set,
// and the four more for the second.
const std::vector<CoordinateId> kLevel3 = {c1(2, 1), c1(3, 1), c1(4, 1),
                                           c1(3, 2), c1(4, 2)};
const std::vector<CoordinateId> kLevel14 =
    plus(kLevel3, {c1(4, 3), c1(5, 1), c1(5, 2), c1(6, 1)});

std::vector<std::pair<int, VanishingCondition>> build_case3_conditions() {
  return {
      {1, {{}, {{c1(2, 1)}}}},
      {2, {{c1(2, 1)}, {{c1(3, 1)}}}},
      {3, {{c1(2, 1), c1(3, 1)}, {}}},
  };
}

std::vector<std::pair<int, VanishingCondition>> build_case4_conditions() {
  std::vector<std::pair<int, VanishingCondition>> out;
  out.push_back({1, {{}, {{c1(2, 1), c1(3, 1), c1(4, 1)}}}});
  out.push_back({2, {{c1(2, 1), c1(3, 1), c1(4, 1)}, {{c1(3, 2), c1(4, 2)}}}});
  out.push_back({4, {kLevel3, {{c1(4, 3)}, {c1(5, 1)}}}});
  out.push_back({5, {plus(kLevel3, {c1(5, 1)}), {{c1(4, 3)}, {c1(5, 2)}}}});
  out.push_back(
      {6, {plus(kLevel3, {c1(5, 1), c1(5, 2)}), {{c1(4, 3)}, {c1(6, 1)}}}});
  out.push_back({7,
                 {plus(kLevel3, {c1(5, 1), c1(5, 2), c1(6, 1)}),
                  {{c1(4, 3)}, {c1(6, 2)}}}});
  out.push_back({8,
                 {plus(kLevel3, {c1(5, 1), c1(5, 2), c1(6, 1), c1(6, 2)}),
                  {{c1(4, 3)}, {c2(2, 1)}}}});
  out.push_back({9, {plus(kLevel3, {c1(4, 3)}), {{c1(5, 1)}}}});
  out.push_back(
      {10, {plus(kLevel3, {c1(4, 3), c1(5, 1)}), {{c1(5, 2)}, {c1(6, 1)}}}});
  out.push_back(
      {11, {plus(kLevel3, {c1(4, 3), c1(5, 1), c1(6, 1)}), {{c1(5, 2)}}}});
  out.push_back({12,
                 {plus(kLevel3, {c1(4, 3), c1(5, 1), c1(5, 2)}),
                  {{c1(6, 1)}, {c1(5, 3)}}}});
  out.push_back({13,
                 {plus(kLevel3, {c1(4, 3), c1(5, 1), c1(5, 2), c1(5, 3)}),
                  {{c1(6, 1)}, {c1(5, 4)}}}});
  out.push_back({15, {kLevel14, {{c1(6, 2)}, {c1(5, 3)}}}});
  out.push_back({16, {plus(kLevel14, {c1(5, 3)}), {{c1(6, 2)}, {c1(5, 4)}}}});
  out.push_back({17, {plus(kLevel14, {c1(6, 2)}), {{c1(5, 3)}}}});
  out.push_back(
      {18, {plus(kLevel14, {c1(6, 2), c1(5, 3)}), {{c1(6, 3)}, {c1(5, 4)}}}});
  return out;
}

std::vector<ClaimSpec> build_claims() {
  std::map<int, VanishingCondition> cond;
  for (const auto& [i, c] : build_case4_conditions()) cond[i] = c;
  std::vector<ClaimSpec> out;

  // Every semistable pencil has a nonvanishing first-column coordinate.
  out.push_back({"claim2",
                 {"semistable"},
                 {VanishingCondition{}},
                 {{c1(2, 1), c1(3, 1), c1(4, 1), c1(5, 1), c1(6, 1), c2(2, 1),
                   c2(3, 1), c2(4, 1), c2(5, 1), c2(6, 1)}}});
  out.push_back({"claim3",
                 {"L6"},
                 {cond.at(6)},
                 {{c2(2, 1), c2(3, 1), c2(4, 1), c2(5, 1), c2(3, 2), c2(4, 2),
                   c2(5, 2)}}});
  out.push_back({"claim4",
                 {"L7"},
                 {cond.at(7)},
                 {{c2(2, 1), c2(3, 1), c2(4, 1), c2(5, 1)}}});
  out.push_back({"claim5",
                 {"L9", "L10"},
                 {cond.at(9), cond.at(10)},
                 {{c2(2, 1), c2(3, 1), c2(4, 1), c2(3, 2), c2(4, 2), c2(4, 3)}}});
  out.push_back(
      {"claim6", {"L11"}, {cond.at(11)}, {{c2(2, 1), c2(3, 1), c2(4, 1)}}});
  out.push_back({"claim7",
                 {"L12"},
                 {cond.at(12)},
                 {{c2(2, 1), c2(3, 1), c2(4, 1), c2(3, 2), c2(4, 2)}}});
  out.push_back(
      {"claim8", {"L13"}, {cond.at(13)}, {{c2(2, 1), c2(3, 1), c2(3, 2)}}});
  out.push_back(
      {"claim9", {"L15"}, {cond.at(15)}, {{c2(2, 1), c2(3, 1), c2(4, 1)}}});
  out.push_back({"claim10", {"L16"}, {cond.at(16)}, {{c2(2, 1), c2(3, 1)}}});
  out.push_back(
      {"claim11", {"L17", "L18"}, {cond.at(17), cond.at(18)}, {{c2(2, 1)}}});

  // Gap axioms: each closes the case analysis between consecutive strata by
  // asserting the nonvanishing that the next stratum's predicate needs.  They
  // double as the coverage axioms of the symbolic partition check.
  out.push_back({"gap-L8",
                 {"L8-pattern"},
                 {{plus(kLevel3, {c1(5, 1), c1(5, 2), c1(6, 1), c1(6, 2)}),
                   {{c1(4, 3)}}}},
                 {{c2(2, 1)}}});
  out.push_back({"gap-L13",
                 {"L13-pattern"},
                 {{plus(kLevel3, {c1(4, 3), c1(5, 1), c1(5, 2), c1(5, 3)}),
                   {{c1(6, 1)}}}},
                 {{c1(5, 4)}}});
  out.push_back({"gap-L16",
                 {"L16-pattern"},
                 {{plus(kLevel14, {c1(5, 3)}), {{c1(6, 2)}}}},
                 {{c1(5, 4)}}});
  out.push_back({"gap-L18",
                 {"L18-pattern"},
                 {{plus(kLevel14, {c1(6, 2), c1(5, 3)}), {}}},
                 {{c1(6, 3)}, {c1(5, 4)}}});
  return out;
}

bool contains(const std::vector<CoordinateId>& v, const CoordinateId& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

std::uint64_t checked_power(std::uint32_t p, std::size_t count) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < count; ++i) {
    total *= p;
    if (total > (std::uint64_t{1} << 24))
      throw std::invalid_argument("exhaustive enumeration too large");
  }
  return total;
}

MatrixPencil<Fp> decode_pencil(CaseId id, std::uint32_t p,
                               const std::vector<CoordinateId>& coords,
                               std::uint64_t index) {
  MatrixPencil<Fp> x = zero_pencil(id, Fp(0, p));
  for (const auto& c : coords) {
    const std::uint32_t digit = static_cast<std::uint32_t>(index % p);
    index /= p;
    if (digit != 0) set_coordinate(x, c, Fp(digit, p));
  }
  return x;
}

// Evaluates a condition on a pure vanishing pattern (bit set = nonzero).
bool condition_on_pattern(const VanishingCondition& cond, std::uint32_t pattern,
                          const std::map<CoordinateId, std::size_t>& bit) {
  for (const auto& z : cond.zero)
    if (pattern & (std::uint32_t{1} << bit.at(z))) return false;
  for (const auto& clause : cond.nonzero) {
    bool some = false;
    for (const auto& c : clause)
      if (pattern & (std::uint32_t{1} << bit.at(c))) {
        some = true;
        break;
      }
    if (!some) return false;
  }
  return true;
}

}  // namespace

std::string stratum_label(const StratumId& id) {
  return "L" + std::to_string(id.index);
}

const std::vector<std::pair<int, VanishingCondition>>& stratum_conditions(
    CaseId case_id) {
  static const auto case3 = build_case3_conditions();
  static const auto case4 = build_case4_conditions();
  if (case_id == CaseId::Case3_D5) return case3;
  if (case_id == CaseId::Case4_E7) return case4;
  throw std::invalid_argument("no stratification for this case");
}

const std::vector<CoordinateId>& stratum_alphabet(CaseId case_id) {
  static const auto build = [](CaseId id) {
    std::vector<CoordinateId> out;
    for (const auto& c : coordinates(id)) {
      bool used = false;
      for (const auto& [idx, cond] : stratum_conditions(id)) {
        if (contains(cond.zero, c)) used = true;
        for (const auto& clause : cond.nonzero)
          if (contains(clause, c)) used = true;
      }
      if (used) out.push_back(c);
    }
    return out;
  };
  static const auto case3 = build(CaseId::Case3_D5);
  static const auto case4 = build(CaseId::Case4_E7);
  if (case_id == CaseId::Case3_D5) return case3;
  if (case_id == CaseId::Case4_E7) return case4;
  throw std::invalid_argument("no stratification for this case");
}

const std::vector<ClaimSpec>& nonvanishing_claims() {
  static const auto claims = build_claims();
  return claims;
}

const ClaimSpec& claim_by_id(const std::string& id) {
  for (const auto& c : nonvanishing_claims())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown claim: " + id);
}

nlohmann::ordered_json claim_report_to_json(const ClaimReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["prime"] = r.prime;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["tested"] = r.tested;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) j["violations"].push_back(v);
  j["stratum_counts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.stratum_counts) j["stratum_counts"][k] = v;
  return j;
}

ClaimReport verify_partition(CaseId case_id, const SampleConfig& cfg) {
  const auto& conds = stratum_conditions(case_id);  // validates the case
  const auto coords = coordinates(case_id);
  ClaimReport r;
  r.claim = "partition";
  r.prime = cfg.prime;
  r.mode = cfg.exhaustive ? "exhaustive" : "random";
  r.seed = cfg.exhaustive ? 0 : cfg.seed;

  auto consider = [&](const MatrixPencil<Fp>& x) {
    const bool keep =
        (case_id == CaseId::Case3_D5) ? in_L0(x) : is_semistable(x);
    if (!keep) return;
    ++r.tested;
    int matched = 0;
    int index = 0;
    for (const auto& [i, cond] : conds)
      if (matches_condition(x, cond)) {
        ++matched;
        index = i;
      }
    if (matched == 1) {
      ++r.stratum_counts[stratum_label(StratumId{case_id, index})];
    } else {
      ++r.stratum_counts[matched == 0 ? "unmatched" : "overlap"];
      r.violations.push_back(pencil_to_json(PencilVariant{x}));
    }
  };

  if (cfg.exhaustive) {
    const std::uint64_t total = checked_power(cfg.prime, coords.size());
    for (std::uint64_t i = 0; i < total; ++i)
      consider(decode_pencil(case_id, cfg.prime, coords, i));
  } else {
    Rng rng = stream(cfg.seed, "partition-" + case_label(case_id) + "-p" +
                                   std::to_string(cfg.prime));
    for (std::uint64_t n = 0; n < cfg.sample_count; ++n) {
      MatrixPencil<Fp> x = zero_pencil(case_id, Fp(0, cfg.prime));
      for (const auto& c : coords)
        set_coordinate(x, c, Fp(rng.below(cfg.prime), cfg.prime));
      consider(x);
    }
  }
  return r;
}

ClaimReport verify_claim(const ClaimSpec& spec, const SampleConfig& cfg) {
  const CaseId case_id = CaseId::Case4_E7;  // all claims concern this case
  const auto coords = coordinates(case_id);
  ClaimReport r;
  r.claim = spec.id;
  r.prime = cfg.prime;
  r.mode = cfg.exhaustive ? "exhaustive" : "random";
  r.seed = cfg.exhaustive ? 0 : cfg.seed;

  for (std::size_t h = 0; h < spec.hypotheses.size(); ++h) {
    const VanishingCondition& cond = spec.hypotheses[h];
    const std::string& label = spec.hypothesis_labels[h];
    std::vector<CoordinateId> free;
    for (const auto& c : coords)
      if (!contains(cond.zero, c)) free.push_back(c);

    auto consider = [&](const MatrixPencil<Fp>& x) {
      if (!matches_condition(x, cond)) return;
      if (!is_semistable(x)) return;
      ++r.tested;
      ++r.stratum_counts[label];
      if (!claim_conclusion_holds(spec, x))
        r.violations.push_back(pencil_to_json(PencilVariant{x}));
    };

    if (cfg.exhaustive) {
      const std::uint64_t total = checked_power(cfg.prime, free.size());
      for (std::uint64_t i = 0; i < total; ++i) {
        MatrixPencil<Fp> x = zero_pencil(case_id, Fp(0, cfg.prime));
        std::uint64_t index = i;
        for (const auto& c : free) {
          const std::uint32_t digit = static_cast<std::uint32_t>(index % cfg.prime);
          index /= cfg.prime;
          if (digit != 0) set_coordinate(x, c, Fp(digit, cfg.prime));
        }
        consider(x);
      }
    } else {
      Rng rng = stream(cfg.seed,
                       spec.id + "-" + label + "-p" + std::to_string(cfg.prime));
      for (std::uint64_t n = 0; n < cfg.sample_count; ++n) {
        MatrixPencil<Fp> x = zero_pencil(case_id, Fp(0, cfg.prime));
        for (const auto& c : free)
          set_coordinate(x, c, Fp(rng.below(cfg.prime), cfg.prime));
        consider(x);
      }
    }
  }
  return r;
}

ClaimReport verify_claim(int claim_number, const SampleConfig& cfg) {
  if (claim_number < 2 || claim_number > 11)
    throw std::invalid_argument("claim number out of range");
  return verify_claim(claim_by_id("claim" + std::to_string(claim_number)), cfg);
}

SymbolicPartitionReport symbolic_partition_check(CaseId case_id) {
  const auto& conds = stratum_conditions(case_id);
  const auto& alphabet = stratum_alphabet(case_id);
  std::map<CoordinateId, std::size_t> bit;
  for (std::size_t i = 0; i < alphabet.size(); ++i) bit[alphabet[i]] = i;

  // The coverage axioms, evaluated on patterns: a pattern is excluded when
  // some axiom's hypothesis holds while its conclusion cannot.
  std::vector<const ClaimSpec*> axioms;
  if (case_id == CaseId::Case4_E7)
    for (const auto& c : nonvanishing_claims())
      if (c.id.rfind("gap-", 0) == 0) axioms.push_back(&c);

  SymbolicPartitionReport report;
  report.disjoint = true;
  report.covered = true;
  report.patterns = std::uint64_t{1} << alphabet.size();
  for (std::uint32_t pattern = 0; pattern < report.patterns; ++pattern) {
    std::vector<int> matched;
    for (const auto& [i, cond] : conds)
      if (condition_on_pattern(cond, pattern, bit)) matched.push_back(i);
    if (matched.size() > 1) {
      report.disjoint = false;
      std::string msg = "pattern " + std::to_string(pattern) + " matches";
      for (int i : matched) msg += " L" + std::to_string(i);
      report.problems.push_back(msg);
      continue;
    }
    if (!matched.empty()) continue;
    bool excluded = false;
    for (const ClaimSpec* axiom : axioms) {
      if (!condition_on_pattern(axiom->hypotheses.at(0), pattern, bit)) continue;
      // Hypothesis holds; the axiom excludes the pattern if some conclusion
      // clause is entirely zero in it.
      for (const auto& clause : axiom->conclusion) {
        bool clause_met = false;
        for (const auto& c : clause)
          if (pattern & (std::uint32_t{1} << bit.at(c))) {
            clause_met = true;
            break;
          }
        if (!clause_met) {
          excluded = true;
          break;
        }
      }
      if (excluded) break;
    }
    if (!excluded) {
      report.covered = false;
      report.problems.push_back("pattern " + std::to_string(pattern) +
                                " not covered");
    }
  }
  return report;
}

std::vector<RVector> stability_points(CaseId case_id,
                                      const std::vector<CoordinateId>& support) {
  const WeightTable& table = weight_table(case_id);
  std::vector<RVector> points;
  points.reserve(support.size());
  for (const auto& c : support) points.push_back(ev_flat(table.at(c)));
  return points;
}

StabilitySweepReport stability_sweep(CaseId case_id, std::uint32_t prime,
                                     std::size_t threads) {
  if (case_id != CaseId::Case1_D4 && case_id != CaseId::Case2_E6)
    throw std::invalid_argument("stability sweep: square cases only");
  const auto coords = coordinates(case_id);
  const std::uint64_t total = checked_power(prime, coords.size());
  if (threads == 0) threads = 1;

  auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
    StabilitySweepReport part;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const MatrixPencil<Fp> x = decode_pencil(case_id, prime, coords, i);
      ++part.total;
      if (!in_L0(x)) continue;
      ++part.locus;
      try {
        const StabilityWitness w = k_stable_witness(x);
        const auto points = stability_points(case_id, w.support);
        if (check_cone_witness(points, w.cone))
          ++part.witnessed;
        else
          part.failures.push_back(pencil_to_json(PencilVariant{x}));
      } catch (const std::logic_error&) {
        part.failures.push_back(pencil_to_json(PencilVariant{x}));
      }
    }
    return part;
  };

  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::future<StabilitySweepReport>> futures;
  for (std::uint64_t lo = 0; lo < total; lo += chunk)
    futures.push_back(std::async(std::launch::async, worker, lo,
                                 std::min(total, lo + chunk)));
  StabilitySweepReport merged;
  for (auto& f : futures) {
    StabilitySweepReport part = f.get();
    merged.total += part.total;
    merged.locus += part.locus;
    merged.witnessed += part.witnessed;
    for (auto& v : part.failures) merged.failures.push_back(std::move(v));
  }
  return merged;
}

}  // namespace pvs
