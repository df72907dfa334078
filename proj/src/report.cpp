#include "degen/report.hpp"

#include "degen/errors.hpp"

#include <sstream>

namespace degen {

using nlohmann::json;

json DiagnosticReport::to_json() const {
    json j;
    j["schema"] = "degen/1";
    j["kind"] = "report";
    j["subject"] = subject;
    j["fixture"] = fixture_summary;
    j["verdicts"] = verdicts;
    j["evidence"] = evidence;
    j["warnings"] = warnings;
    j["exit_status"] = exit_status;
    return j;
}

DiagnosticReport DiagnosticReport::from_json(const json& j) {
    if (!j.is_object() || j.value("kind", "") != "report")
        throw input_error("not a diagnostic report document");
    DiagnosticReport r;
    r.subject = j.value("subject", "");
    r.fixture_summary = j.value("fixture", json::object());
    r.verdicts = j.value("verdicts", json::object());
    r.evidence = j.value("evidence", json::object());
    for (const auto& w : j.value("warnings", json::array())) r.warnings.push_back(w.get<std::string>());
    r.exit_status = j.value("exit_status", 0);
    return r;
}

namespace {

// Arrays of {name, pass, ...} render as a pass/fail matrix.
bool is_check_matrix(const json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& e : j)
        if (!e.is_object() || !e.contains("name") || !e.contains("pass")) return false;
    return true;
}

void render(std::ostringstream& os, const std::string& label, const json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        if (!label.empty()) os << pad << label << ":\n";
        for (const auto& [key, value] : j.items()) render(os, key, value, indent + 2);
    } else if (is_check_matrix(j)) {
        os << pad << label << ":\n";
        for (const auto& e : j) {
            os << pad << "  " << (e["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
               << e["name"].get<std::string>();
            for (const char* extra : {"witness", "detail"})
                if (e.contains(extra)) os << " -- " << e[extra].get<std::string>();
            os << "\n";
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j)
            if (e.is_object() || e.is_array()) scalars = false;
        if (scalars) {
            os << pad << label << ": " << j.dump() << "\n";
        } else {
            os << pad << label << ":\n";
            for (std::size_t i = 0; i < j.size(); ++i) render(os, "- [" + std::to_string(i) + "]", j[i], indent + 2);
        }
    } else if (j.is_string()) {
        os << pad << label << ": " << j.get<std::string>() << "\n";
    } else {
        os << pad << label << ": " << j.dump() << "\n";
    }
}

} // namespace

std::string DiagnosticReport::to_text() const {
    std::ostringstream os;
    os << "== " << subject << " diagnostic ==\n";
    render(os, "fixture", fixture_summary, 0);
    render(os, "verdicts", verdicts, 0);
    render(os, "evidence", evidence, 0);
    if (!warnings.empty()) {
        os << "warnings:\n";
        for (const auto& w : warnings) os << "  ! " << w << "\n";
    }
    os << "status: " << (exit_status == 0 ? "clean" : "criterion failure") << "\n";
    return os.str();
}

} // namespace degen
