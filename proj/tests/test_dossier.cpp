#include <doctest.h>

#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvs/dossier.hpp"

using nlohmann::ordered_json;
using namespace pvs;

namespace {

RunConfig make_cfg(std::vector<CaseId> cases, std::vector<CheckKind> checks,
                   std::vector<std::uint32_t> primes = {2, 3},
                   std::uint64_t samples = 100000) {
  RunConfig cfg = default_run_config();
  cfg.cases = std::move(cases);
  cfg.checks = std::move(checks);
  cfg.primes = std::move(primes);
  cfg.sample_count = samples;
  cfg.threads = 2;
  return cfg;
}

bool json_has_key_recursive(const ordered_json& j, const std::string& key) {
  if (j.is_object() && j.contains(key)) return true;
  if (j.is_structured())
    for (const auto& element : j)
      if (json_has_key_recursive(element, key)) return true;
  return false;
}

}  // namespace

TEST_SUITE("dossier") {

TEST_CASE("check kind names round-trip") {
  const auto& kinds = all_check_kinds();
  REQUIRE(kinds.size() == 7);
  for (CheckKind kind : kinds)
    CHECK(check_kind_from_name(check_kind_name(kind)) == kind);
  CHECK(check_kind_name(kinds.front()) == "weights");
  CHECK(check_kind_name(kinds.back()) == "certificates");
  CHECK_THROWS_AS(check_kind_from_name("spectra"), std::invalid_argument);
  CHECK_THROWS_AS(check_kind_from_name(""), std::invalid_argument);
}

TEST_CASE("default configuration matches the documented run") {
  const RunConfig cfg = default_run_config();
  CHECK(cfg.cases.size() == 4);
  CHECK(cfg.primes == std::vector<std::uint32_t>{2, 3});
  CHECK(cfg.sample_count == 100000);
  CHECK(cfg.seed == 20240601);
  CHECK(cfg.checks.size() == 7);
  CHECK(cfg.threads == 0);
}

TEST_CASE("malformed configurations are rejected") {
  const auto ident = std::vector<CheckKind>{CheckKind::Identities};

  RunConfig cfg = make_cfg({}, ident);
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = make_cfg({CaseId::Case1_D4}, {});
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = make_cfg({CaseId::Case1_D4}, ident, {});
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = make_cfg({CaseId::Case1_D4, CaseId::Case1_D4}, ident);
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = make_cfg({CaseId::Case1_D4}, ident, {2, 2});
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = make_cfg({CaseId::Case1_D4}, ident, {1});
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = make_cfg({CaseId::Case1_D4}, ident, {6});
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);

  cfg = make_cfg({CaseId::Case1_D4},
                 {CheckKind::Identities, CheckKind::Identities});
  CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}

TEST_CASE("identity-only dossier has the documented shape") {
  const RunConfig cfg = make_cfg(
      {CaseId::Case1_D4, CaseId::Case2_E6, CaseId::Case3_D5,
       CaseId::Case4_E7},
      {CheckKind::Identities}, {2, 3}, 0);
  const Dossier d = run(cfg);
  CHECK(d.all_hold);

  const ordered_json& doc = d.document;
  CHECK(doc["schema"] == "pvs-dossier/1");
  CHECK(doc["verdict"] == "AllHold");
  CHECK(doc["violations"].empty());
  CHECK(doc.contains("wall_ms"));

  const ordered_json& conf = doc["config"];
  CHECK(conf["cases"] == ordered_json::array({1, 2, 3, 4}));
  CHECK(conf["primes"] == ordered_json::array({2, 3}));
  CHECK(conf["samples"] == 0);
  CHECK(conf["seed"] == 20240601);
  CHECK(conf["checks"] == ordered_json::array({"identities"}));

  const ordered_json& checks = doc["checks"];
  REQUIRE(checks.size() == 4);
  const std::vector<std::size_t> counts = {1, 5, 1, 18};
  for (std::size_t i = 0; i < 4; ++i) {
    const ordered_json& chk = checks[i];
    CHECK(chk["id"] == "case" + std::to_string(i + 1) + "-identities");
    CHECK(chk["kind"] == "identities");
    CHECK(chk["case"] == i + 1);
    CHECK(chk["status"] == "ok");
    CHECK(chk["violations"].empty());
    CHECK(chk["payload"]["count"] == counts[i]);
    CHECK(chk["payload"]["identities"].size() == counts[i]);
    CHECK(chk.contains("wall_ms"));
  }
}

TEST_CASE("selection order does not affect the planned checks") {
  // Cases, primes, and checks are normalized, so two configurations naming
  // the same work produce identical documents modulo wall clock.
  RunConfig a = make_cfg({CaseId::Case3_D5, CaseId::Case1_D4},
                         {CheckKind::Weights, CheckKind::Identities}, {3, 2}, 0);
  RunConfig b = make_cfg({CaseId::Case1_D4, CaseId::Case3_D5},
                         {CheckKind::Identities, CheckKind::Weights}, {2, 3}, 0);
  const ordered_json da = scrub_wall_clock(run(a).document);
  const ordered_json db = scrub_wall_clock(run(b).document);
  CHECK(da.dump() == db.dump());
  REQUIRE(da["checks"].size() == 4);
  CHECK(da["checks"][0]["id"] == "case1-weights");
  CHECK(da["checks"][1]["id"] == "case1-identities");
  CHECK(da["checks"][2]["id"] == "case3-weights");
  CHECK(da["checks"][3]["id"] == "case3-identities");
}

TEST_CASE("runs are deterministic modulo wall clock") {
  const RunConfig cfg = make_cfg(
      {CaseId::Case3_D5},
      {CheckKind::Weights, CheckKind::Identities, CheckKind::HLemmas,
       CheckKind::Certificates});
  const Dossier first = run(cfg);
  const Dossier second = run(cfg);
  CHECK(first.all_hold);
  CHECK(json_has_key_recursive(first.document, "wall_ms"));
  const ordered_json a = scrub_wall_clock(first.document);
  const ordered_json b = scrub_wall_clock(second.document);
  CHECK_FALSE(json_has_key_recursive(a, "wall_ms"));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("certificate checks expose the documented thresholds") {
  const RunConfig cfg = make_cfg({CaseId::Case3_D5},
                                 {CheckKind::Certificates});
  const Dossier d = run(cfg);
  CHECK(d.all_hold);
  const ordered_json& checks = d.document["checks"];
  REQUIRE(checks.size() == 3);

  CHECK(checks[0]["id"] == "case3-L1-certificate");
  CHECK(checks[0]["payload"]["threshold"] == "4");
  CHECK(checks[0]["payload"]["documented_threshold"].is_null());

  CHECK(checks[1]["id"] == "case3-L2-certificate");
  CHECK(checks[1]["payload"]["threshold"] == "4");
  CHECK(checks[1]["payload"]["documented_threshold"] == "4");

  CHECK(checks[2]["id"] == "case3-L3-certificate");
  CHECK(checks[2]["payload"]["threshold"] == "2");
  CHECK(checks[2]["payload"]["documented_threshold"] == "2");

  for (const auto& chk : checks) {
    CHECK(chk["status"] == "ok");
    CHECK(chk["payload"]["validated"] == true);
    CHECK(chk["payload"]["corners"].size() == 1);
  }
}

TEST_CASE("stability check reproduces the field-two census") {
  const RunConfig cfg = make_cfg({CaseId::Case1_D4}, {CheckKind::Stability});
  const Dossier d = run(cfg);
  CHECK(d.all_hold);
  const ordered_json& chk = d.document["checks"][0];
  CHECK(chk["id"] == "case1-stability");
  CHECK(chk["payload"]["prime"] == 2);
  CHECK(chk["payload"]["total"] == 256);
  CHECK(chk["payload"]["locus"] == 12);
  CHECK(chk["payload"]["witnessed"] == 12);
  CHECK(chk["status"] == "ok");
}

TEST_CASE("partition and claim checks run at small sample sizes") {
  const RunConfig cfg =
      make_cfg({CaseId::Case3_D5, CaseId::Case4_E7},
               {CheckKind::Strata, CheckKind::Claims}, {2}, 300);
  const Dossier d = run(cfg);
  CHECK(d.all_hold);
  const ordered_json& checks = d.document["checks"];
  REQUIRE(checks.size() == 16);

  CHECK(checks[0]["id"] == "case3-strata-p2");
  CHECK(checks[0]["payload"]["mode"] == "exhaustive");
  CHECK(checks[0]["payload"]["tested"] == 336);
  CHECK(checks[0]["payload"]["stratum_counts"]["L1"] == 192);
  CHECK(checks[0]["payload"]["stratum_counts"]["L2"] == 96);
  CHECK(checks[0]["payload"]["stratum_counts"]["L3"] == 48);

  CHECK(checks[1]["id"] == "case4-strata-p2");
  CHECK(checks[1]["payload"]["mode"] == "random");
  CHECK(checks[1]["payload"]["seed"] == 20240601);

  CHECK(checks[2]["id"] == "case4-claim2-p2");
  CHECK(checks[2]["kind"] == "claims");
  CHECK(checks[2]["payload"]["claim"] == "claim2");
  CHECK(checks[15]["id"] == "case4-gap-L18-p2");
  for (const auto& chk : checks) CHECK(chk["status"] == "ok");
}

TEST_CASE("claim checks fan out over the configured primes") {
  const RunConfig cfg =
      make_cfg({CaseId::Case4_E7}, {CheckKind::Claims}, {2, 3}, 40);
  const Dossier d = run(cfg);
  const ordered_json& checks = d.document["checks"];
  REQUIRE(checks.size() == 28);
  CHECK(checks[0]["id"] == "case4-claim2-p2");
  CHECK(checks[1]["id"] == "case4-claim2-p3");
  CHECK(checks[2]["id"] == "case4-claim3-p2");
  CHECK(checks[26]["id"] == "case4-gap-L18-p2");
  CHECK(checks[27]["id"] == "case4-gap-L18-p3");
}

TEST_CASE("explain renders stored checks from the JSON alone") {
  const RunConfig cert_cfg = make_cfg(
      {CaseId::Case3_D5, CaseId::Case4_E7}, {CheckKind::Certificates});
  // Round-trip through text so explain provably works on a parsed file.
  const ordered_json doc =
      ordered_json::parse(run(cert_cfg).document.dump(2));

  const std::string l8 = explain("case4-L8-certificate", doc);
  CHECK(l8.find("3d(1,43)+2d(2,21)") != std::string::npos);
  CHECK(l8.find("lambda 5") != std::string::npos);
  CHECK(l8.find("threshold: 13") != std::string::npos);
  CHECK(l8.find("[ok]") != std::string::npos);

  const std::string l2 = explain("case3-L2-certificate", doc);
  CHECK(l2.find("threshold: 4") != std::string::npos);
  CHECK(l2.find("documented threshold: 4") != std::string::npos);

  const std::string l5 = explain("case4-L5-certificate", doc);
  CHECK(l5.find("box-q") != std::string::npos);
  CHECK(l5.find("p-form infeasible") != std::string::npos);
  CHECK(l5.find("q-form feasible") != std::string::npos);

  CHECK_THROWS_AS(explain("case9-L1-certificate", doc),
                  std::invalid_argument);
  CHECK_THROWS_AS(explain("case3-L2-certificate", ordered_json::array()),
                  std::invalid_argument);
  CHECK_THROWS_AS(explain("case3-L2-certificate", ordered_json{{"x", 1}}),
                  std::invalid_argument);

  const RunConfig w_cfg =
      make_cfg({CaseId::Case1_D4}, {CheckKind::Weights}, {2}, 0);
  const ordered_json wdoc = run(w_cfg).document;
  const std::string weights = explain("case1-weights", wdoc);
  CHECK(weights.find("matches the torus-action oracle") != std::string::npos);
  CHECK(weights.find("case 1 weight table") != std::string::npos);
}

TEST_CASE("explain renders identity transcription notes") {
  const RunConfig cfg =
      make_cfg({CaseId::Case4_E7}, {CheckKind::Identities}, {2}, 0);
  const ordered_json doc = run(cfg).document;
  const std::string text = explain("case4-identities", doc);
  CHECK(text.find("case4-L11-direction") != std::string::npos);
  CHECK(text.find("displayed as") != std::string::npos);
  CHECK(text.find("[FAILS]") == std::string::npos);
}

TEST_CASE("manifest json lists identity and stratum inputs") {
  const ordered_json m = manifest_json(default_run_config());
  CHECK(m["schema"] == "pvs-manifest/1");
  CHECK(m["identities"]["case1"].size() == 1);
  CHECK(m["identities"]["case2"].size() == 5);
  CHECK(m["identities"]["case4"].size() == 18);
  CHECK(m["strata"]["case3"].size() == 3);
  CHECK(m["strata"]["case4"].size() == 16);
  CHECK_FALSE(m["strata"].contains("case1"));

  const RunConfig narrow =
      make_cfg({CaseId::Case2_E6}, {CheckKind::Identities});
  const ordered_json n = manifest_json(narrow);
  CHECK(n["identities"].size() == 1);
  CHECK(n["strata"].empty());
}

}  // TEST_SUITE
