#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "cqs/config.hpp"

namespace cqs {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitConfig = 2, kExitResource = 3 };

inline constexpr const char* kReportSchema = "cqs-report/1";

struct CommandResult {
    nlohmann::json report;
    std::map<std::string, std::string> files;  // name -> contents (CSV)
    int exit_code = kExitOk;
};

// basis, structconst, gram, decomp, verify. Never throws: configuration and
// resource problems come back as exit codes with an "error" entry.
CommandResult run_command(const std::string& command, RunConfig cfg);

// The report as written to disk: pretty JSON with a trailing newline.
std::string report_text(const CommandResult& r);

// Writes report.json and the CSV files under cfg.out (created if needed).
void write_outputs(const CommandResult& r, const std::string& dir);

}  // namespace cqs
