#ifndef DIRAC_CLI_HPP
#define DIRAC_CLI_HPP

// Command dispatch behind the dirac-cli front end.  `run` never throws and
// never touches the process; the tool only parses flags and prints.

#include "dirac/suites.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dirac {

enum class OutputFormat { json, text };

struct RunConfig {
  std::vector<std::string> command;   // e.g. {"map", "dirac"}
  std::string input_path;             // "-" reads `stdin_source`
  std::optional<std::string> inline_input;
  std::string predicate = "all";
  SuiteConfig suite;
  OutputFormat format = OutputFormat::json;
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;  // 0 true / pass, 1 false / fail, 2 malformed
  json report;
  std::string text;
};

RunResult run(const RunConfig& config, std::istream& stdin_source);

/// "structure decompose", "map dirac", ...
std::vector<std::string> command_names();

}  // namespace dirac

#endif  // DIRAC_CLI_HPP
