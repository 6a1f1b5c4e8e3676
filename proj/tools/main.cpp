#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::vector<std::string> split_commas(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::size_t start = 0;
    while (true) {
      auto comma = r.find(',', start);
      std::string part = r.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dsmt::cli;
  CLI::App app{"dsmt: DSm hyper-power sets and belief combination"};
  app.require_subcommand(1);

  HpsetOptions hp;
  std::vector<std::string> frame_raw;
  auto* hpset = app.add_subcommand("hpset", "Enumerate the hyper-power set under a model");
  hpset->add_option("--frame", frame_raw, "Comma-separated element names")->required();
  hpset->add_option("--constraints", hp.constraints,
                    "Expressions forced empty, or files with one expression per line");
  hpset->add_flag("--matrix", hp.matrix, "Print the atom basis and binary encoding rows");
  hpset->add_flag("--force", hp.force, "Allow frames beyond the default enumeration limit");

  CombineOptions co;
  auto* combine = app.add_subcommand("combine", "Combine the sources of a scenario file");
  combine->add_option("--scenario", co.scenario, "Scenario JSON file")->required();
  combine->add_option("--rule", co.rule, "dsmh, dsmc, dempster, yager, smets, dubois-prade, mixture");
  combine->add_flag("--breakdown", co.breakdown, "Show phi and the S1/S2/S3 terms (dsmh)");
  combine->add_flag("--compress", co.compress, "Merge model-equivalent propositions (dsmh)");
  combine->add_flag("--all", co.all, "List every proposition, including zero masses");
  combine->add_option("--out", co.format, "table or csv");
  combine->add_flag("--force", co.force, "Allow --all beyond the default enumeration limit");

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "Dempster vs hybrid rule on the two-source conflict sweep");
  sweep->add_option("--epsilon-steps", so.steps, "Number of uniform samples of epsilon in [0,1]");
  sweep->add_option("--out", so.out_path, "Write CSV to this file instead of stdout");

  ReproduceOptions ro;
  auto* reproduce = app.add_subcommand("reproduce", "Recompute the built-in reference tables");
  reproduce->add_option("--example", ro.example, "Example id, or 'all'");
  reproduce->add_flag("--list", ro.list, "List example ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  if (hpset->parsed()) {
    hp.frame = split_commas(frame_raw);
    return cmd_hpset(hp, std::cout, std::cerr);
  }
  if (combine->parsed()) return cmd_combine(co, std::cout, std::cerr);
  if (sweep->parsed()) return cmd_sweep(so, std::cout, std::cerr);
  return cmd_reproduce(ro, std::cout, std::cerr);
}
