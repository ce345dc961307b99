#pragma once

#include <functional>

#include "qproxy/analysis.hpp"

namespace qproxy {

// One scenario's in-memory output: named grids (the file stems) plus the
// per-scenario analysis report.
struct ScenarioResult {
  std::vector<std::pair<std::string, DensityGrid>> grids;
  AnalysisReport report;
  std::vector<std::string> written_files;  // filled by run_scenario
};

struct Preset {
  std::string name;
  std::vector<int> figures;  // paper figure numbers this preset reproduces
  std::string description;
  std::function<ScenarioResult()> build;
};

// Registry covering figures 1-23.
const std::vector<Preset>& preset_registry();

// Builds the named preset without touching the filesystem.
ScenarioResult build_scenario(const std::string& name);

// Builds and writes `<name>_<key>.<csv|json>` plus `<name>_report.json` into
// out_dir (created if missing).  Unknown names raise usage_error listing the
// registry.
ScenarioResult run_scenario(const std::string& name, const std::string& out_dir,
                            const std::string& format = "csv");

}  // namespace qproxy
