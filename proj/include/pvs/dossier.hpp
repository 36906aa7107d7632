#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "pvs/weights.hpp"

namespace pvs {

// ---------------------------------------------------------------------------
// Verification run configuration and the JSON dossier it produces.
//
// A run plans a deterministic list of checks from the configuration, executes
// them on a bounded worker pool, and assembles one JSON document.  Everything
// in the document except the wall_ms timing fields is a pure function of the
// configuration.

inline constexpr char kDossierSchema[] = "pvs-dossier/1";
inline constexpr char kManifestSchema[] = "pvs-manifest/1";

enum class CheckKind {
  Weights,       // weight table vs the torus-action oracle
  Identities,    // displayed weight combinations, recomputed exactly
  Stability,     // exhaustive F_2 stability sweep (square cases)
  Strata,        // stratum partition of the sampled locus
  Claims,        // nonvanishing claims on the alternating case
  HLemmas,       // laws of the log-height function h
  Certificates,  // convergence certificates per stratum
};

const std::vector<CheckKind>& all_check_kinds();
std::string check_kind_name(CheckKind kind);
// Throws std::invalid_argument for an unknown name.
CheckKind check_kind_from_name(const std::string& name);

struct RunConfig {
  std::vector<CaseId> cases;
  std::vector<std::uint32_t> primes;
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 20240601;
  std::vector<CheckKind> checks;
  std::size_t threads = 0;  // 0: hardware concurrency
};

// All four cases, primes {2, 3}, 10^5 samples, seed 20240601, every check.
RunConfig default_run_config();

struct Dossier {
  nlohmann::ordered_json document;
  bool all_hold = false;
};

/// Plans and executes every check the configuration selects.  Throws
/// std::invalid_argument for a malformed configuration (empty or duplicate
/// cases, composite primes, unknown checks); domain-level failures never
/// throw and are recorded as violations in the affected check instead.
Dossier run(const RunConfig& cfg);

/// The static inputs behind a run: the identity combinations and the
/// per-stratum certificate items for the configured cases.
nlohmann::ordered_json manifest_json(const RunConfig& cfg);

/// Renders one stored check as text, from the dossier JSON alone.  Throws
/// std::invalid_argument when the id is unknown or the document is not a
/// dossier.
std::string explain(const std::string& check_id,
                    const nlohmann::ordered_json& dossier);

/// Removes every wall_ms field, recursively.  Two runs of the same
/// configuration agree byte for byte after this.
nlohmann::ordered_json scrub_wall_clock(nlohmann::ordered_json doc);

}  // namespace pvs
