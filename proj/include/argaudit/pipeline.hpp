#pragma once

#include <filesystem>
#include <string>

#include "argaudit/config.hpp"
#include "argaudit/investigation.hpp"

namespace argaudit {

struct AuditJob {
    std::filesystem::path policy_path;
    std::filesystem::path movies_path;
    std::filesystem::path ratings_path;
    std::filesystem::path config_path;
    std::string semantics_override;  // empty: use the config's choice
    std::filesystem::path out_dir;
};

struct AuditOutcome {
    Verdict verdict;
    nlohmann::ordered_json report;
    std::filesystem::path report_path;
    std::string summary;
};

// Runs the whole audit and writes per-topic transcript/APX/DOT files plus
// report.json into out_dir. File contents are byte-stable for identical
// inputs. The DOT rendering highlights the grounded extension of each
// topic's graph.
AuditOutcome run_audit(const AuditJob& job);

}  // namespace argaudit
