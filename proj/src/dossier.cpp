#include "pvs/dossier.hpp"

#include "pvs/certify.hpp"
#include "pvs/strata.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pvs {

namespace {

using nlohmann::ordered_json;

// Exhaustive enumeration budget for the partition check: p^(#coordinates)
// pencils must fit below this bound, otherwise the check samples instead.
constexpr std::uint64_t kExhaustiveBudget = std::uint64_t{1} << 24;

// Fixed trial count for the h-function law check.
constexpr std::size_t kHLemmaTrials = 1000;

// Stored violation lists are clamped so a pathological run cannot balloon
// the dossier; the counts in the payload stay exact.
constexpr std::size_t kMaxStoredViolations = 50;

struct KindName {
  CheckKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {CheckKind::Weights, "weights"},
    {CheckKind::Identities, "identities"},
    {CheckKind::Stability, "stability"},
    {CheckKind::Strata, "strata"},
    {CheckKind::Claims, "claims"},
    {CheckKind::HLemmas, "h-lemmas"},
    {CheckKind::Certificates, "certificates"},
};

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_square_case(CaseId c) { return case_number(c) <= 2; }

std::string case_tag(CaseId c) {
  return "case" + std::to_string(case_number(c));
}

// Validated, canonically ordered copy of a RunConfig: cases and primes
// sorted, checks in declaration order, thread count resolved.  Two
// configurations selecting the same work normalize identically, so their
// dossiers agree byte for byte modulo wall_ms.
struct NormalConfig {
  std::vector<CaseId> cases;
  std::vector<std::uint32_t> primes;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<CheckKind> checks;
  std::size_t threads = 1;
};

NormalConfig normalize(const RunConfig& cfg) {
  if (cfg.cases.empty()) throw std::invalid_argument("no cases selected");
  if (cfg.primes.empty()) throw std::invalid_argument("no primes selected");
  if (cfg.checks.empty()) throw std::invalid_argument("no checks selected");

  NormalConfig n;
  n.cases = cfg.cases;
  std::sort(n.cases.begin(), n.cases.end(), [](CaseId a, CaseId b) {
    return case_number(a) < case_number(b);
  });
  if (std::adjacent_find(n.cases.begin(), n.cases.end()) != n.cases.end())
    throw std::invalid_argument("duplicate case selected");

  n.primes = cfg.primes;
  std::sort(n.primes.begin(), n.primes.end());
  if (std::adjacent_find(n.primes.begin(), n.primes.end()) != n.primes.end())
    throw std::invalid_argument("duplicate prime selected");
  for (std::uint32_t p : n.primes)
    if (!is_prime_number(p))
      throw std::invalid_argument("not a prime: " + std::to_string(p));

  for (const auto& entry : kKindNames)
    if (std::find(cfg.checks.begin(), cfg.checks.end(), entry.kind) !=
        cfg.checks.end())
      n.checks.push_back(entry.kind);
  if (n.checks.size() != cfg.checks.size())
    throw std::invalid_argument("duplicate check selected");

  n.sample_count = cfg.sample_count;
  n.seed = cfg.seed;
  n.threads = cfg.threads ? cfg.threads
                          : std::max(1u, std::thread::hardware_concurrency());
  return n;
}

// One unit of work; the fields beyond kind/case narrow it down for the
// parametrized checks.
struct PlannedCheck {
  std::string id;
  CheckKind kind = CheckKind::Weights;
  CaseId case_id = CaseId::Case1_D4;
  std::uint32_t prime = 0;         // Strata, Claims
  std::string claim_id;            // Claims
  std::size_t stratum_index = 0;   // Certificates
};

std::vector<PlannedCheck> plan(const NormalConfig& cfg) {
  std::vector<PlannedCheck> out;
  for (CaseId c : cfg.cases) {
    const std::string tag = case_tag(c);
    auto add = [&out, c](std::string id, CheckKind kind) -> PlannedCheck& {
      PlannedCheck task;
      task.id = std::move(id);
      task.kind = kind;
      task.case_id = c;
      out.push_back(std::move(task));
      return out.back();
    };
    for (CheckKind kind : cfg.checks) {
      switch (kind) {
        case CheckKind::Weights:
          add(tag + "-weights", kind);
          break;
        case CheckKind::Identities:
          add(tag + "-identities", kind);
          break;
        case CheckKind::Stability:
          // The stability statement is exhaustive over F_2 and concerns the
          // square-matrix cases only.
          if (is_square_case(c)) add(tag + "-stability", kind);
          break;
        case CheckKind::Strata:
          if (!is_square_case(c))
            for (std::uint32_t p : cfg.primes)
              add(tag + "-strata-p" + std::to_string(p), kind).prime = p;
          break;
        case CheckKind::Claims:
          if (case_number(c) == 4)
            for (const ClaimSpec& claim : nonvanishing_claims())
              for (std::uint32_t p : cfg.primes) {
                PlannedCheck& task = add(
                    tag + "-" + claim.id + "-p" + std::to_string(p), kind);
                task.prime = p;
                task.claim_id = claim.id;
              }
          break;
        case CheckKind::HLemmas:
          if (!is_square_case(c)) add(tag + "-h-lemmas", kind);
          break;
        case CheckKind::Certificates:
          if (!is_square_case(c)) {
            const auto& items = stratum_manifest(c);
            for (std::size_t i = 0; i < items.size(); ++i)
              add(tag + "-" + stratum_label(items[i].stratum) + "-certificate",
                  kind)
                  .stratum_index = i;
          }
          break;
      }
    }
  }
  return out;
}

void clamp_violations(ordered_json& violations) {
  if (violations.size() <= kMaxStoredViolations) return;
  const std::size_t omitted = violations.size() - kMaxStoredViolations;
  violations.erase(violations.begin() + kMaxStoredViolations,
                   violations.end());
  violations.push_back("... " + std::to_string(omitted) +
                       " further violations omitted");
}

void run_weights_check(CaseId c, ordered_json& payload,
                       ordered_json& violations) {
  const WeightTable table = weight_table(c);
  std::size_t derived_fill = 0;
  for (const auto& [id, entry] : table.entries)
    if (entry.derived_fill) ++derived_fill;
  payload["entries"] = table.entries.size();
  payload["derived_fill"] = derived_fill;
  ordered_json diffs = ordered_json::array();
  for (const WeightDiscrepancy& d : compare_weight_tables(c)) {
    ordered_json row;
    row["coordinate"] = coordinate_label(d.coordinate);
    row["tabulated"] = ev_to_json(d.tabulated);
    row["derived"] = ev_to_json(d.derived);
    diffs.push_back(std::move(row));
    violations.push_back("weight mismatch at " + coordinate_label(d.coordinate));
  }
  payload["discrepancies"] = std::move(diffs);
}

void run_identities_check(CaseId c, ordered_json& payload,
                          ordered_json& violations) {
  const std::vector<IdentityCheck> checks = check_identities(c);
  payload["count"] = checks.size();
  ordered_json arr = ordered_json::array();
  for (const IdentityCheck& chk : checks) {
    arr.push_back(identity_to_json(chk));
    if (!chk.holds)
      violations.push_back("identity does not hold: " + chk.label);
  }
  payload["identities"] = std::move(arr);
}

void run_stability_check(CaseId c, std::size_t threads, ordered_json& payload,
                         ordered_json& violations) {
  const StabilitySweepReport rep = stability_sweep(c, 2, threads);
  payload["prime"] = 2;
  payload["total"] = rep.total;
  payload["locus"] = rep.locus;
  payload["witnessed"] = rep.witnessed;
  for (const auto& f : rep.failures) violations.push_back(f);
  if (rep.witnessed != rep.locus && rep.failures.empty())
    violations.push_back("witness count disagrees with the locus census");
}

// Moves the report's violation objects up to the check level and keeps the
// rest of the report as the payload.
void adopt_claim_report(ClaimReport rep, ordered_json& payload,
                        ordered_json& violations) {
  ordered_json rj = claim_report_to_json(rep);
  for (auto& v : rj["violations"]) violations.push_back(std::move(v));
  rj.erase("violations");
  payload = std::move(rj);
}

void run_strata_check(CaseId c, std::uint32_t prime, const NormalConfig& cfg,
                      ordered_json& payload, ordered_json& violations) {
  std::uint64_t space = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < coordinates(c).size(); ++i) {
    space *= prime;
    if (space > kExhaustiveBudget) {
      exhaustive = false;
      break;
    }
  }
  SampleConfig sc;
  sc.prime = prime;
  sc.exhaustive = exhaustive;
  sc.sample_count = cfg.sample_count;
  sc.seed = cfg.seed;
  adopt_claim_report(verify_partition(c, sc), payload, violations);
}

void run_claims_check(const std::string& claim_id, std::uint32_t prime,
                      const NormalConfig& cfg, ordered_json& payload,
                      ordered_json& violations) {
  SampleConfig sc;
  sc.prime = prime;
  sc.exhaustive = false;
  sc.sample_count = cfg.sample_count;
  sc.seed = cfg.seed;
  adopt_claim_report(verify_claim(claim_by_id(claim_id), sc), payload,
                     violations);
}

void run_h_lemmas_check(CaseId c, const NormalConfig& cfg,
                        ordered_json& payload, ordered_json& violations) {
  const HLemmaReport rep = verify_h_lemmas(c, kHLemmaTrials, cfg.seed);
  payload["trials"] = rep.trials;
  payload["checks"] = rep.checks;
  for (const std::string& v : rep.violations) violations.push_back(v);
}

void run_certificate_check(CaseId c, std::size_t index, ordered_json& payload,
                           ordered_json& violations) {
  const StratumItem& item = stratum_manifest(c).at(index);
  const ConvergenceCertificate cert = certify_stratum(item);
  const bool ok = check_certificate(cert);
  payload = certificate_to_json(cert);
  payload["validated"] = ok;
  if (!ok)
    violations.push_back("certificate failed re-validation: " +
                         stratum_label(item.stratum));
}

ordered_json execute_check(const PlannedCheck& task, const NormalConfig& cfg) {
  ordered_json check;
  check["id"] = task.id;
  check["kind"] = check_kind_name(task.kind);
  check["case"] = case_number(task.case_id);
  ordered_json payload = ordered_json::object();
  ordered_json violations = ordered_json::array();
  try {
    switch (task.kind) {
      case CheckKind::Weights:
        run_weights_check(task.case_id, payload, violations);
        break;
      case CheckKind::Identities:
        run_identities_check(task.case_id, payload, violations);
        break;
      case CheckKind::Stability:
        run_stability_check(task.case_id, cfg.threads, payload, violations);
        break;
      case CheckKind::Strata:
        run_strata_check(task.case_id, task.prime, cfg, payload, violations);
        break;
      case CheckKind::Claims:
        run_claims_check(task.claim_id, task.prime, cfg, payload, violations);
        break;
      case CheckKind::HLemmas:
        run_h_lemmas_check(task.case_id, cfg, payload, violations);
        break;
      case CheckKind::Certificates:
        run_certificate_check(task.case_id, task.stratum_index, payload,
                              violations);
        break;
    }
  } catch (const ClassificationError& e) {
    // The offending pencil travels with the violation so the dossier alone
    // pins down what broke.
    ordered_json v;
    v["error"] = e.what();
    v["pencil"] = e.pencil;
    violations.push_back(std::move(v));
  } catch (const std::logic_error& e) {
    violations.push_back(std::string("internal inconsistency: ") + e.what());
  } catch (const std::runtime_error& e) {
    violations.push_back(std::string("check aborted: ") + e.what());
  }
  clamp_violations(violations);
  check["status"] = violations.empty() ? "ok" : "violations";
  check["violations"] = std::move(violations);
  check["payload"] = std::move(payload);
  return check;
}

std::vector<ordered_json> execute_all(const std::vector<PlannedCheck>& tasks,
                                      const NormalConfig& cfg) {
  std::vector<ordered_json> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = execute_check(tasks[i], cfg);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;
      results[i]["wall_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
              .count();
    }
  };

  const std::size_t workers = std::min(cfg.threads, tasks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

ordered_json config_echo(const NormalConfig& cfg) {
  ordered_json conf;
  ordered_json cases = ordered_json::array();
  for (CaseId c : cfg.cases) cases.push_back(case_number(c));
  conf["cases"] = std::move(cases);
  conf["primes"] = cfg.primes;
  conf["samples"] = cfg.sample_count;
  conf["seed"] = cfg.seed;
  ordered_json checks = ordered_json::array();
  for (CheckKind k : cfg.checks) checks.push_back(check_kind_name(k));
  conf["checks"] = std::move(checks);
  return conf;
}

}  // namespace

const std::vector<CheckKind>& all_check_kinds() {
  static const std::vector<CheckKind> kinds = [] {
    std::vector<CheckKind> out;
    for (const auto& entry : kKindNames) out.push_back(entry.kind);
    return out;
  }();
  return kinds;
}

std::string check_kind_name(CheckKind kind) {
  for (const auto& entry : kKindNames)
    if (entry.kind == kind) return entry.name;
  throw std::logic_error("unknown check kind");
}

CheckKind check_kind_from_name(const std::string& name) {
  for (const auto& entry : kKindNames)
    if (name == entry.name) return entry.kind;
  throw std::invalid_argument("unknown check: " + name);
}

RunConfig default_run_config() {
  RunConfig cfg;
  cfg.cases.assign(std::begin(kAllCases), std::end(kAllCases));
  cfg.primes = {2, 3};
  cfg.sample_count = 100000;
  cfg.seed = 20240601;
  cfg.checks = all_check_kinds();
  return cfg;
}

Dossier run(const RunConfig& raw) {
  const auto start = std::chrono::steady_clock::now();
  const NormalConfig cfg = normalize(raw);
  const std::vector<PlannedCheck> tasks = plan(cfg);
  std::vector<ordered_json> results = execute_all(tasks, cfg);

  ordered_json doc;
  doc["schema"] = kDossierSchema;
  doc["config"] = config_echo(cfg);
  ordered_json checks = ordered_json::array();
  ordered_json offenders = ordered_json::array();
  bool all_hold = true;
  for (ordered_json& r : results) {
    if (r["status"] != "ok") {
      all_hold = false;
      offenders.push_back(r["id"]);
    }
    checks.push_back(std::move(r));
  }
  doc["checks"] = std::move(checks);
  doc["violations"] = std::move(offenders);
  doc["verdict"] = all_hold ? "AllHold" : "Violations";
  const auto elapsed = std::chrono::steady_clock::now() - start;
  doc["wall_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return {std::move(doc), all_hold};
}

nlohmann::ordered_json manifest_json(const RunConfig& raw) {
  const NormalConfig cfg = normalize(raw);
  ordered_json out;
  out["schema"] = kManifestSchema;
  ordered_json identities = ordered_json::object();
  ordered_json strata = ordered_json::object();
  for (CaseId c : cfg.cases) {
    ordered_json arr = ordered_json::array();
    for (const IdentityCheck& chk : check_identities(c))
      arr.push_back(identity_to_json(chk));
    identities[case_tag(c)] = std::move(arr);
    if (!is_square_case(c)) strata[case_tag(c)] = stratum_manifest_json(c);
  }
  out["identities"] = std::move(identities);
  out["strata"] = std::move(strata);
  return out;
}

nlohmann::ordered_json scrub_wall_clock(nlohmann::ordered_json doc) {
  if (doc.is_object() && doc.contains("wall_ms")) doc.erase("wall_ms");
  if (doc.is_structured())
    for (auto& element : doc) element = scrub_wall_clock(std::move(element));
  return doc;
}

// ---------------------------------------------------------------------------
// explain: renders one stored check from the dossier JSON alone.

namespace {

std::string ev_json_to_string(const ordered_json& ev) {
  std::string s = "(";
  const ordered_json& blocks = ev.at("d");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) s += ",";
    const ordered_json& block = blocks[b];
    if (block.size() == 1) {
      s += block[0].get<std::string>();
    } else {
      s += "(";
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) s += ",";
        s += block[i].get<std::string>();
      }
      s += ")";
    }
  }
  s += ")";
  if (!ev.at("lambda").is_null())
    s += " | lambda " + ev["lambda"].get<std::string>();
  return s;
}

std::string combo_json_to_string(const ordered_json& combo) {
  std::string s;
  for (const auto& term : combo) {
    if (!s.empty()) s += " + ";
    const std::string label = term.at(0).get<std::string>();
    const std::string coeff = term.at(1).get<std::string>();
    if (coeff == "1")
      s += label;
    else
      s += coeff + "*" + label;
  }
  return s;
}

std::string rvector_json_to_string(const ordered_json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get<std::string>();
  }
  return s + ")";
}

void render_violations(std::ostringstream& out, const ordered_json& check) {
  const ordered_json& violations = check.at("violations");
  if (violations.empty()) return;
  out << "violations (" << violations.size() << "):\n";
  for (const auto& v : violations) {
    if (v.is_string())
      out << "  " << v.get<std::string>() << "\n";
    else
      out << "  " << v.dump() << "\n";
  }
}

void render_weights(std::ostringstream& out, const ordered_json& check) {
  const ordered_json& p = check.at("payload");
  out << "case " << check.at("case") << " weight table: " << p.at("entries")
      << " entries, " << p.at("derived_fill")
      << " filled from the derivation oracle\n";
  const ordered_json& diffs = p.at("discrepancies");
  if (diffs.empty()) {
    out << "the table matches the torus-action oracle at every coordinate\n";
  } else {
    out << diffs.size() << " discrepancies:\n";
    for (const auto& d : diffs)
      out << "  " << d.at("coordinate").get<std::string>() << ": table "
          << ev_json_to_string(d.at("tabulated")) << " vs oracle "
          << ev_json_to_string(d.at("derived")) << "\n";
  }
}

void render_identities(std::ostringstream& out, const ordered_json& check) {
  const ordered_json& p = check.at("payload");
  out << "case " << check.at("case") << " identities: " << p.at("count")
      << " combinations checked exactly\n";
  for (const auto& chk : p.at("identities")) {
    out << "  " << chk.at("label").get<std::string>() << ": "
        << combo_json_to_string(chk.at("combo")) << " = "
        << ev_json_to_string(chk.at("expected"))
        << (chk.at("holds").get<bool>() ? "  [holds]" : "  [FAILS]") << "\n";
    if (!chk.at("transcribed").is_null())
      out << "    displayed as " << ev_json_to_string(chk.at("transcribed"))
          << "; the exact recomputation above is what the argument uses\n";
  }
}

void render_stability(std::ostringstream& out, const ordered_json& check) {
  const ordered_json& p = check.at("payload");
  out << "case " << check.at("case")
      << " exhaustive stability sweep over F_" << p.at("prime") << "\n"
      << "pencils: " << p.at("total") << " total, " << p.at("locus")
      << " in the distinguished locus, " << p.at("witnessed")
      << " witnessed\n";
}

void render_sampling_report(std::ostringstream& out, const ordered_json& p) {
  out << "mode: " << p.at("mode").get<std::string>();
  if (p.at("mode").get<std::string>() == "random")
    out << " (seed " << p.at("seed") << ")";
  out << ", prime " << p.at("prime") << "\n";
  out << "members tested: " << p.at("tested") << "\n";
  const ordered_json& counts = p.at("stratum_counts");
  if (!counts.empty()) {
    out << "counts:\n";
    for (const auto& [label, count] : counts.items())
      out << "  " << label << ": " << count << "\n";
  }
}

void render_strata(std::ostringstream& out, const ordered_json& check) {
  out << "case " << check.at("case") << " stratum partition check\n";
  render_sampling_report(out, check.at("payload"));
}

void render_claims(std::ostringstream& out, const ordered_json& check) {
  const ordered_json& p = check.at("payload");
  out << "nonvanishing claim " << p.at("claim").get<std::string>()
      << " on case " << check.at("case") << "\n";
  render_sampling_report(out, p);
}

void render_h_lemmas(std::ostringstream& out, const ordered_json& check) {
  const ordered_json& p = check.at("payload");
  out << "case " << check.at("case") << " h-function laws: " << p.at("trials")
      << " random torus points, " << p.at("checks")
      << " individual checks\n";
}

void render_certificate(std::ostringstream& out, const ordered_json& check) {
  const ordered_json& p = check.at("payload");
  out << "stratum " << p.at("stratum").get<std::string>() << " (case "
      << p.at("case") << "), base form "
      << p.at("base_form").get<std::string>() << "\n";
  const ordered_json& removed = p.at("removed");
  if (!removed.empty()) {
    out << "removed coordinates:";
    for (const auto& r : removed) out << " " << r.get<std::string>();
    out << "\n";
  }
  out << "directions:\n";
  for (const auto& d : p.at("directions")) {
    out << "  " << d.at("label").get<std::string>() << " = "
        << ev_json_to_string(d.at("exponent"));
    if (d.at("weakened").get<bool>())
      out << "  (entrywise lower bound of "
          << combo_json_to_string(d.at("combo")) << ")";
    out << "\n";
  }
  out << "ray: " << rvector_json_to_string(p.at("ray")) << "\n";
  for (const auto& corner : p.at("corners")) {
    out << "corner (a=" << corner.at("a").get<std::string>()
        << ", b=" << corner.at("b").get<std::string>()
        << "): base " << ev_json_to_string(corner.at("base"))
        << ", coefficients "
        << rvector_json_to_string(corner.at("coefficients")) << ", margin "
        << corner.at("margin").get<std::string>() << "\n";
  }
  if (!p.at("threshold").is_null())
    out << "threshold: " << p.at("threshold").get<std::string>() << "\n";
  if (!p.at("documented_threshold").is_null())
    out << "documented threshold: "
        << p.at("documented_threshold").get<std::string>() << "\n";
  const ordered_json& dominations = p.at("dominations");
  if (!dominations.empty()) {
    out << "dominations:";
    for (const auto& d : dominations)
      out << " " << d.at(0).get<std::string>() << ">="
          << d.at(1).get<std::string>();
    out << "\n";
  }
  if (!p.at("p_form_feasible").is_null())
    out << "family forms: p-form "
        << (p.at("p_form_feasible").get<bool>() ? "feasible" : "infeasible")
        << ", q-form "
        << (p.at("q_form_feasible").get<bool>() ? "feasible" : "infeasible")
        << "\n";
  out << "re-validated: "
      << (p.at("validated").get<bool>() ? "yes" : "NO") << "\n";
}

}  // namespace

std::string explain(const std::string& check_id,
                    const nlohmann::ordered_json& dossier) {
  if (!dossier.is_object() || !dossier.contains("checks") ||
      !dossier["checks"].is_array())
    throw std::invalid_argument("not a dossier document");
  const ordered_json* found = nullptr;
  for (const auto& chk : dossier["checks"])
    if (chk.is_object() && chk.value("id", std::string{}) == check_id) {
      found = &chk;
      break;
    }
  if (!found) throw std::invalid_argument("unknown check id: " + check_id);

  std::ostringstream out;
  try {
    const std::string kind = found->at("kind").get<std::string>();
    out << check_id << " [" << found->at("status").get<std::string>()
        << "]\n";
    if (kind == "weights")
      render_weights(out, *found);
    else if (kind == "identities")
      render_identities(out, *found);
    else if (kind == "stability")
      render_stability(out, *found);
    else if (kind == "strata")
      render_strata(out, *found);
    else if (kind == "claims")
      render_claims(out, *found);
    else if (kind == "h-lemmas")
      render_h_lemmas(out, *found);
    else if (kind == "certificates")
      render_certificate(out, *found);
    else
      throw std::invalid_argument("unrecognized check kind: " + kind);
    render_violations(out, *found);
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument("malformed check payload for " + check_id +
                                ": " + e.what());
  }
  return out.str();
}

}  // namespace pvs
