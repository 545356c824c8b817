#include "dirac/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  dirac::RunConfig config;
  std::string format = "json";
  std::string inline_json;

  CLI::App app{"Exact checks for linear Dirac structures, Dirac maps and Dirac groups"};
  app.add_option("command", config.command, "Subcommand words, e.g. `map dirac` or `suite equivalences`")->required();
  app.add_option("--input,-i", config.input_path, "Input JSON file, or - for stdin");
  app.add_option("--json", inline_json, "Inline input JSON");
  app.add_option("--seed", config.suite.seed, "Random seed for suites");
  app.add_option("--trials", config.suite.trials, "Trials per check for suites");
  app.add_option("--max-dim", config.suite.max_dim, "Largest vector space dimension for suites");
  app.add_option("--predicate", config.predicate, "Map predicate: all, M, M2p, M2pp, piU, Eeps, dual, dual_Eeps");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", config.timing, "Include elapsed time in suite reports");
  app.footer("Commands:\n  " + [] {
    std::string s;
    for (const auto& name : dirac::command_names()) s += (s.empty() ? "" : "\n  ") + name;
    return s;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!inline_json.empty()) config.inline_input = inline_json;
  config.format = format == "text" ? dirac::OutputFormat::text : dirac::OutputFormat::json;

  const dirac::RunResult result = dirac::run(config, std::cin);
  if (config.format == dirac::OutputFormat::text)
    std::cout << result.text;
  else
    std::cout << result.report.dump(2) << "\n";
  if (result.exit_code == 2 && result.report.contains("error"))
    std::cerr << "error: " << result.report["error"]["field"].get<std::string>() << ": "
              << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
