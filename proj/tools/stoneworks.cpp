// Command-line front end: runs verifier commands from a JSON manifest and
// writes a deterministic report (plus optional DOT diagrams).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "stoneworks/run.hpp"

namespace fs = std::filesystem;
using namespace stoneworks;

int main(int argc, char** argv) {
  CLI::App app{"stoneworks: finite Stone duality and tensor-ideal classification workbench"};
  app.get_formatter()->column_width(28);

  const std::set<std::string> ops = {"validate",  "ideals",    "spectrum", "dual",
                                     "support-check", "classify", "theorem-a", "theorem-b",
                                     "theorem-c1", "barthel",  "crossed",  "report"};
  std::string command, in_path, out_dir, target;
  bool assert_mode = false, want_dot = false;
  app.add_option("command", command, "one of: validate ideals spectrum dual support-check classify "
                                     "theorem-a theorem-b theorem-c1 barthel crossed report")
      ->required()
      ->check(CLI::IsMember(ops));
  app.add_option("--in", in_path, "manifest file (JSON)")->required();
  app.add_option("--out", out_dir, "output directory for report.json (stdout when omitted)");
  app.add_option("--target", target, "restrict the command to one named input");
  app.add_flag("--assert", assert_mode, "exit 1 when any verdict is negative");
  app.add_flag("--dot", want_dot, "also emit DOT diagrams (needs --out)");
  CLI11_PARSE(app, argc, argv);

  try {
    Manifest manifest = parse_manifest_file(in_path);
    std::vector<Command> commands;
    if (command == "report") {
      commands = manifest.commands;
    } else {
      commands.push_back({command, target});
    }
    RunOutcome outcome = run(manifest, commands, assert_mode);
    std::string text = outcome.report.dump(2) + "\n";
    if (out_dir.empty()) {
      std::cout << text;
    } else {
      fs::create_directories(out_dir);
      std::ofstream report(fs::path(out_dir) / "report.json", std::ios::binary);
      report << text;
      if (want_dot)
        for (const auto& [file, body] : dot_bundle(manifest)) {
          std::ofstream dot(fs::path(out_dir) / file, std::ios::binary);
          dot << body;
        }
    }
    return outcome.exit_status;
  } catch (const EquivalenceViolation& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const ContractError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
