#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsym/cli/config.hpp"

namespace qsym::cli {

constexpr const char* kToolName = "qsym";
constexpr const char* kToolVersion = "0.1.0";

/// Exit codes; no others are produced.
enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitConfig = 2, kExitResource = 3 };

/// A finished run. `doc` holds tool, version, command, config, checks or rows,
/// summary, status and exit_code, in that order. Wall times only appear when the
/// config asks for them, so the rendering is a pure function of the config.
struct Report {
  nlohmann::ordered_json doc;
  int exit_code = kExitOk;

  std::string to_json() const;
  /// RFC 4180 with CRLF line ends: the checks table for verify, the rows otherwise.
  std::string to_csv() const;
};

/// Column order of the CSV table, fixed per (command, model).
std::vector<std::string> csv_columns(Command command, model::Kind kind);

/// Quotes a field when it holds a comma, quote, CR or LF.
std::string csv_escape(const std::string& field);

/// 15 significant digits, as a JSON number.
nlohmann::ordered_json rounded(double value);

Report cmd_verify(const RunConfig& config);
Report cmd_spectrum(const RunConfig& config);
Report cmd_oracle(const RunConfig& config);
Report cmd_scan(const RunConfig& config);
Report run_command(const RunConfig& config);

}  // namespace qsym::cli
