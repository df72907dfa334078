#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace degen {

/// Diagnostic emitted by every CLI subcommand: verdicts plus the exact
/// evidence they were derived from. Deterministic for a given fixture and
/// losslessly round-trippable through JSON.
struct DiagnosticReport {
    std::string subject;            // "mhs", "metric", "curve", "surgery", "pg", ...
    nlohmann::json fixture_summary; // shape of the input
    nlohmann::json verdicts;
    nlohmann::json evidence;
    std::vector<std::string> warnings;
    int exit_status = 0; // 0 clean, 1 mathematical failure

    nlohmann::json to_json() const;
    static DiagnosticReport from_json(const nlohmann::json& j);

    std::string to_text() const;
};

} // namespace degen
