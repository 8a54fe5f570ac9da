#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ballq {

// Outcome of one CLI invocation: ordered facts, free-text diagnostics, and
// the exit code (0 pass, 1 expectation or math failure, 2 input error).
struct Report {
  int exit_code = 0;
  bool porcelain = false;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> diagnostics;
  std::string raw;  // when set (help text), rendered verbatim

  const char* status() const;
  void fact(std::string key, std::string value);
};

// Runs one verb from argv-style arguments (program name excluded).
// Never throws: parse and input failures become status=error reports.
Report run_command(const std::vector<std::string>& args);

// Facts as "key = value" lines ("key=value" under --porcelain), diagnostics
// (human mode only), then the status line last.
std::string render(const Report& report);

int cli_main(int argc, char** argv);

}  // namespace ballq
