// Command line front end: plans and runs the verification checks, emits the
// JSON dossier, and renders stored checks back as text.
//
// Exit codes: 0 every check holds, 1 violations recorded, 2 usage or
// internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pvs/dossier.hpp"

namespace {

constexpr int kExitAllHold = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

std::string check_name_list() {
  std::string s;
  for (pvs::CheckKind kind : pvs::all_check_kinds()) {
    if (!s.empty()) s += ", ";
    s += pvs::check_kind_name(kind);
  }
  return s;
}

pvs::RunConfig build_config(const std::vector<int>& cases,
                            const std::vector<std::uint32_t>& primes,
                            std::uint64_t samples, std::uint64_t seed,
                            const std::vector<std::string>& checks) {
  pvs::RunConfig cfg;
  cfg.cases.clear();
  for (int n : cases) cfg.cases.push_back(pvs::case_from_number(n));
  cfg.primes = primes;
  cfg.sample_count = samples;
  cfg.seed = seed;
  cfg.checks.clear();
  for (const std::string& name : checks)
    cfg.checks.push_back(pvs::check_kind_from_name(name));
  return cfg;
}

nlohmann::ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return nlohmann::ordered_json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification dossier for the prehomogeneous pencil "
               "convergence argument"};

  std::vector<int> cases = {1, 2, 3, 4};
  std::vector<std::uint32_t> primes = {2, 3};
  std::uint64_t samples = 100000;
  std::uint64_t seed = 20240601;
  std::vector<std::string> checks;
  for (pvs::CheckKind kind : pvs::all_check_kinds())
    checks.push_back(pvs::check_kind_name(kind));
  std::string out_path;
  std::string explain_id;
  std::string in_path;
  bool manifest = false;

  app.add_option("--cases", cases, "cases to verify, from 1 to 4")
      ->delimiter(',');
  app.add_option("--primes", primes, "finite field primes for sampling")
      ->delimiter(',');
  app.add_option("--samples", samples, "random samples per sampled check");
  app.add_option("--seed", seed, "root seed for every randomized check");
  app.add_option("--checks", checks, "subset of: " + check_name_list())
      ->delimiter(',');
  app.add_option("--out", out_path, "write the dossier JSON to this path");
  app.add_flag("--manifest", manifest,
               "print the identity and stratum manifests instead of running");
  app.add_option("--explain", explain_id,
                 "render one stored check from an existing dossier");
  app.add_option("--in", in_path, "dossier JSON file for --explain");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const pvs::RunConfig cfg =
        build_config(cases, primes, samples, seed, checks);

    if (manifest) {
      std::cout << pvs::manifest_json(cfg).dump(2) << "\n";
      return kExitAllHold;
    }

    if (!explain_id.empty()) {
      if (in_path.empty())
        throw std::invalid_argument("--explain requires --in <dossier.json>");
      std::cout << pvs::explain(explain_id, load_json_file(in_path));
      return kExitAllHold;
    }

    const pvs::Dossier dossier = pvs::run(cfg);
    const std::string text = dossier.document.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot write " + out_path);
      out << text;
      std::cout << "wrote dossier (" << dossier.document["checks"].size()
                << " checks, verdict "
                << dossier.document["verdict"].get<std::string>() << ") to "
                << out_path << "\n";
    } else {
      std::cout << text;
    }
    return dossier.all_hold ? kExitAllHold : kExitViolations;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
