// Command-line driver: parses a .flag document and runs one verification or
// computation command over it. Exit codes: 0 success, 1 verification
// failure, 2 input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "flagcurv/report.hpp"

namespace {

int run(const std::string& command, const std::string& path, const flagcurv::CommandOptions& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  flagcurv::CommandResult result = flagcurv::run_command(command, buffer.str(), opt);
  if (opt.json)
    std::cout << result.report.dump(2) << "\n";
  else
    std::cout << result.human;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact curvature calculus for contact coframe structures"};
  app.set_version_flag("--version", std::string(flagcurv::kToolVersion));
  app.require_subcommand(1);

  struct Cmd {
    std::string name;
    std::string help;
  };
  const Cmd commands[] = {
      {"check", "frame consistency and structure-equation verification"},
      {"reduce", "normalized connection form and torsion of the contact coframe"},
      {"curvature", "full curvature report (coefficients, invariants, integrand)"},
      {"invariant", "global-invariant integrand; optionally pull back and integrate"},
      {"gauge", "verify the gauge transformation law for the [gauge] element"},
      {"cr", "verify the reality conditions for the [conjugation] involution"},
  };

  std::string file;
  flagcurv::CommandOptions opt;
  std::string volume;
  for (const Cmd& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("file", file, "input .flag document")->required();
    sub->add_flag("--json", opt.json, "emit the machine-readable report");
    if (c.name == "invariant") {
      sub->add_flag("--kill-fiber", opt.kill_fiber,
                    "pull back along the constant-scale section (drop the fiber direction)");
      sub->add_option("--volume", volume,
                      "multiply the integrand coefficient by this total-volume scalar");
    }
  }

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  if (!volume.empty()) opt.volume_expression = volume;
  return run(sub->get_name(), file, opt);
}
