#pragma once

#include "stabmod/io.hpp"

namespace stabmod::scenarios {

inline constexpr const char* kVersion = "0.1.0";

struct ScenarioConfig {
    std::string name;
    unsigned p = 3;
    unsigned precision = 8;
    int tower_max_k = 3;
    int max_degree = 6;
    uint64_t seed = 12345;
    std::string out_path;  // empty: no file written
};

struct Check {
    std::string name;
    std::string expected;
    std::string provenance;  // paper | trivial | derived
    std::string got;
    bool pass = false;
};

struct Report {
    std::string scenario;
    ScenarioConfig config;
    std::string version = kVersion;
    std::vector<Check> checks;
    bool overall = false;
    double elapsed_seconds = 0;  // printed to the console, never serialized

    long failed_count() const;
};

/// Registered scenario names, in the order the documentation lists them.
std::vector<std::string> scenario_names();

/// Runs one scenario; writes the report file when out_path is set. Unknown
/// names and infeasible bounds (k > 4) throw before any output is produced.
Report run(const ScenarioConfig& config);

/// Deterministic serialization of a report (timing excluded by design so
/// equal config and seed give byte-identical files).
io::json report_to_json(const Report& r);

Report report_from_json(const io::json& j);

std::string report_to_text(const Report& r);

}  // namespace stabmod::scenarios
