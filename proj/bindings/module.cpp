// Thin python surface: every function takes and returns JSON text, so the
// python side stays schema-driven and the exact rational arithmetic never
// crosses the boundary as floats.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "pvs/certify.hpp"
#include "pvs/dossier.hpp"

namespace py = pybind11;
using nlohmann::ordered_json;

namespace {

pvs::RunConfig config_from_json(const std::string& text) {
  const ordered_json j =
      text.empty() ? ordered_json::object() : ordered_json::parse(text);
  pvs::RunConfig cfg = pvs::default_run_config();
  if (j.contains("cases")) {
    cfg.cases.clear();
    for (const auto& n : j["cases"])
      cfg.cases.push_back(pvs::case_from_number(n.get<int>()));
  }
  if (j.contains("primes"))
    cfg.primes = j["primes"].get<std::vector<std::uint32_t>>();
  if (j.contains("samples")) cfg.sample_count = j["samples"].get<std::uint64_t>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("checks")) {
    cfg.checks.clear();
    for (const auto& name : j["checks"])
      cfg.checks.push_back(pvs::check_kind_from_name(name.get<std::string>()));
  }
  if (j.contains("threads")) cfg.threads = j["threads"].get<std::size_t>();
  return cfg;
}

ordered_json config_to_json(const pvs::RunConfig& cfg) {
  ordered_json j;
  ordered_json cases = ordered_json::array();
  for (pvs::CaseId c : cfg.cases) cases.push_back(pvs::case_number(c));
  j["cases"] = std::move(cases);
  j["primes"] = cfg.primes;
  j["samples"] = cfg.sample_count;
  j["seed"] = cfg.seed;
  ordered_json checks = ordered_json::array();
  for (pvs::CheckKind k : cfg.checks) checks.push_back(pvs::check_kind_name(k));
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

PYBIND11_MODULE(_pvsverify, m) {
  m.doc() =
      "Exact-arithmetic verification dossiers for the prehomogeneous pencil "
      "convergence argument.  All payloads are JSON strings; rationals "
      "travel as \"p/q\" text.";

  m.def(
      "run",
      [](const std::string& config) {
        return pvs::run(config_from_json(config)).document.dump(2);
      },
      py::arg("config") = std::string("{}"),
      "Run the configured checks and return the dossier JSON.  The config "
      "object may override cases, primes, samples, seed, checks, threads.");

  m.def(
      "explain",
      [](const std::string& check_id, const std::string& dossier) {
        return pvs::explain(check_id, ordered_json::parse(dossier));
      },
      py::arg("check_id"), py::arg("dossier"),
      "Render one stored check as text from a dossier JSON string.");

  m.def(
      "manifest",
      [](const std::string& config) {
        return pvs::manifest_json(config_from_json(config)).dump(2);
      },
      py::arg("config") = std::string("{}"),
      "Identity and stratum manifests for the configured cases.");

  m.def(
      "default_config",
      [] { return config_to_json(pvs::default_run_config()).dump(2); },
      "The default run configuration as JSON.");

  m.def(
      "scrub_wall_clock",
      [](const std::string& dossier) {
        return pvs::scrub_wall_clock(ordered_json::parse(dossier)).dump(2);
      },
      py::arg("dossier"),
      "Remove every wall_ms field; the result is run-to-run reproducible.");

  m.def(
      "certificates",
      [](int case_number) {
        ordered_json out = ordered_json::array();
        for (const auto& cert :
             pvs::stratum_certificates(pvs::case_from_number(case_number)))
          out.push_back(pvs::certificate_to_json(cert));
        return out.dump(2);
      },
      py::arg("case_number"),
      "All convergence certificates of one case, searched and re-proved.");

  m.def(
      "check_names",
      [] {
        std::vector<std::string> names;
        for (pvs::CheckKind k : pvs::all_check_kinds())
          names.push_back(pvs::check_kind_name(k));
        return names;
      },
      "The available check names, in canonical order.");
}
