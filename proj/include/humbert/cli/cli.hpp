#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace humbert::cli {

constexpr const char* kReportVersion = "humbert-report/1";

enum ExitCode { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks{};

  void check(std::string name, bool pass, std::string detail = "");
  bool ok() const;
  nlohmann::json to_json() const;
};

/// Line-oriented rendering of a report JSON.
std::string render_text(const nlohmann::json& report);

/// args excludes the program name. Writes the report to out, diagnostics to
/// err, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace humbert::cli
