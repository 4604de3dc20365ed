#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace germcalc;
using namespace germcalc::app;

namespace {

int emit(const Outcome& o, bool json) {
  if (json) {
    std::cout << o.doc.dump(2) << "\n";
  } else if (o.exit == kOk || o.exit == kFailure) {
    std::cout << o.text;
  } else {
    std::cerr << o.text;
  }
  return o.exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor, Tjurina and Bruce-Roberts numbers of germs on complete intersections"};
  app.require_subcommand(1);
  bool json = false;
  std::optional<std::uint64_t> seed;

  auto* compute = app.add_subcommand("compute", "Invariants of X and f from a germfile");
  std::string computeFile;
  std::vector<std::string> names;
  std::string method = "both";
  compute->add_option("file", computeFile, "Germfile")->required();
  compute->add_option("--invariants", names, "Comma-separated subset of invariants")->delimiter(',');
  compute->add_option("--method", method, "Routes for the Bruce-Roberts numbers")
      ->check(CLI::IsMember({"direct", "formula", "both"}));
  compute->add_flag("--json", json, "Print the JSON report");
  compute->add_option("--seed", seed, "Seed for random choices (overrides the germfile)");

  auto* verify = app.add_subcommand("verify", "Check identities on one or more germfiles");
  std::vector<std::string> verifyFiles;
  std::vector<std::string> identities;
  unsigned jobs = 1;
  verify->add_option("files", verifyFiles, "Germfiles")->required();
  verify->add_option("--identities", identities, "Comma-separated subset of t22,t46,c412,c49,p47,p41,cor23")
      ->delimiter(',');
  verify->add_option("--jobs", jobs, "Files verified concurrently")->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "Print the JSON report");
  verify->add_option("--seed", seed, "Seed for random choices (overrides the germfiles)");

  auto* conjecture = app.add_subcommand("conjecture", "Scan Tor lengths of random regular sequences");
  std::size_t n = 0, k = 0;
  std::uint64_t trials = 10, scanSeed = 1;
  std::uint32_t maxdeg = 3;
  std::string fieldText = "Fp:32003", stratum = "generic";
  conjecture->add_option("--n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
  conjecture->add_option("--k", k, "Length of the regular sequence I")->required()->check(CLI::PositiveNumber);
  conjecture->add_option("--trials", trials, "Number of trials");
  conjecture->add_option("--maxdeg", maxdeg, "Maximal degree of generators")->check(CLI::PositiveNumber);
  conjecture->add_option("--seed", scanSeed, "Seed");
  conjecture->add_option("--field", fieldText, "Q or Fp:<prime>");
  conjecture->add_option("--stratum", stratum, "generic, or contained (I inside J)")
      ->check(CLI::IsMember({"generic", "contained"}));
  conjecture->add_flag("--json", json, "Print the JSON report");

  auto* lc = app.add_subcommand("lc", "Export the logarithmic characteristic ideals");
  std::string lcFile, outPath;
  lc->add_option("file", lcFile, "Germfile")->required();
  lc->add_option("--out", outPath, "Output JSON path")->required();
  lc->add_flag("--json", json, "Also print the JSON report");
  lc->add_option("--seed", seed, "Seed for random choices (overrides the germfile)");

  auto* oracle = app.add_subcommand("oracle", "Dense linear-algebra cross-checks");
  oracle->require_subcommand(1);
  auto* oracleColength = oracle->add_subcommand("colength", "Colength of the X ideal by truncated elimination");
  std::string oracleFile;
  std::uint32_t truncation = 20;
  oracleColength->add_option("file", oracleFile, "Germfile")->required();
  oracleColength->add_option("--truncation", truncation, "Largest degree examined")->required();
  oracleColength->add_flag("--json", json, "Print the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  std::string command = "compute";
  try {
    const std::uint32_t cap = degreeCapFromEnvironment();
    if (*compute) {
      const Germfile g = loadGermfile(computeFile, cap);
      const Method m = method == "direct" ? Method::Direct : method == "formula" ? Method::Formula : Method::Both;
      return emit(computeCommand(g, names, m, seed.value_or(g.seed.value_or(1))), json);
    }
    if (*verify) {
      command = "verify";
      return emit(verifyCorpus(verifyFiles, identities, seed, jobs, cap), json);
    }
    if (*conjecture) {
      command = "conjecture";
      const ScanStratum s = stratum == "contained" ? ScanStratum::Contained : ScanStratum::Generic;
      return emit(conjectureCommand(n, k, trials, maxdeg, scanSeed, Field::parse(fieldText), s), json);
    }
    if (*lc) {
      command = "lc";
      const Germfile g = loadGermfile(lcFile, cap);
      return emit(lcCommand(g, outPath, seed.value_or(g.seed.value_or(1))), json);
    }
    command = "oracle colength";
    return emit(oracleCommand(loadGermfile(oracleFile, cap), truncation), json);
  } catch (const std::exception& e) {
    return emit(errorOutcome(command, e), json);
  }
}
