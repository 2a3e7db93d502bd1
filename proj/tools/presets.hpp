#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rinorm::tools {

// Result of one preset or custom run.  `json` is the canonical report: its
// bytes depend only on the inputs and the seed, never on timing, so reruns
// with the same seed are byte-identical.  Wall-clock time is kept out of the
// report and written to a sidecar by emit_report.
struct RunReport {
    std::string mode;  // preset name, or "run"
    std::uint64_t seed;
    int n;  // size override; 0 means preset default
    bool pass;
    std::string json;
    std::vector<std::pair<std::string, std::string>> csv_files;  // name -> contents
    double wall_ms;
};

// Executes a named preset.  config_json may be empty or an object with
// preset-specific overrides (e.g. {"p": 2, "q": 1}).  Throws UnknownPreset
// for unknown names, ConfigInvalid for bad overrides.
RunReport run_preset(const std::string& name, const std::string& config_json,
                     std::uint64_t seed, int n);

// Executes a config-driven custom run (mode "run").
RunReport run_custom(const std::string& config_json, std::uint64_t seed, int n);

// Writes report.json, every CSV, and timing.txt under out_dir (created if
// missing).  Throws IoFailure when the directory or files cannot be written.
void emit_report(const RunReport& report, const std::string& out_dir);

}  // namespace rinorm::tools
