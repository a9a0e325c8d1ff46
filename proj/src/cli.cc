// Copyright 2026 The Optimin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "optimin/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "optimin/errors.h"
#include "optimin/generators.h"
#include "optimin/io.h"
#include "optimin/solvers.h"

namespace optimin {
namespace {

struct Options {
  int jobs = 0;
  bool verbose = false;

  std::string gen_kind;
  int low = 2;
  int high = 100;
  std::string reward = "2";
  int rounds = 100;
  std::string strategies = "AllC,AllD,TFT,Grim,EndDefector(1)";
  std::string out = "-";

  std::string file;
  bool optimin = false;
  bool nash = false;
  bool maximin = false;
  bool guarantees = false;
  std::string mode = "pareto";
  std::string format = "json";

  std::string check_kind;
  bool mixed = false;
  int support_cap = kDefaultSupportCap;
};

int ResolveJobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("OPTIMIN_JOBS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open file \"" + path + "\"");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write file \"" + path + "\"");
  file << text;
}

Game Generate(const Options& o) {
  if (o.gen_kind == "figure1") return Figure1Game();
  if (o.gen_kind == "pd-stage") return PrisonersDilemmaStage();
  if (o.gen_kind == "traveler") {
    TravelerConfig config{o.low, o.high, Rational::Parse(o.reward)};
    return TravelersDilemma(config);
  }
  const auto strategies = ParseStrategyList(o.strategies);
  return RepeatedMetaGame(PrisonersDilemmaStage(), strategies, o.rounds);
}

int RunSolve(const Options& o, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const ReportFormat format = ParseReportFormat(o.format);
  const Game game = ParseGame(ReadInput(o.file, in));
  const int jobs = ResolveJobs(o.jobs);
  if (o.verbose) {
    err << "optimin: " << game.NumPlayers() << " players, "
        << game.NumProfiles() << " profiles, " << jobs << " job(s)\n";
  }
  const bool any = o.optimin || o.nash || o.maximin || o.guarantees;
  SolveReport report;
  report.mode = ParseMode(o.mode);
  const bool want_optimin = o.optimin || !any;
  const bool want_table = o.guarantees || format == ReportFormat::kCsv;
  if (want_optimin || want_table) {
    const auto table = GuaranteeTable(game, jobs);
    if (o.verbose) err << "optimin: guarantee table done\n";
    if (want_optimin) report.optimin = SelectOptimin(table, report.mode);
    if (want_table) report.guarantees = table;
  }
  if (o.nash || !any) report.nash = PureNash(game);
  if (o.maximin || !any) {
    std::vector<MaximinResult> values;
    for (int p = 0; p < game.NumPlayers(); ++p) {
      values.push_back(MaximinPure(game, p));
    }
    report.maximin = std::move(values);
  }
  out << SerializeReport(game, report, format);
  return kExitOk;
}

int RunCheck(const Options& o, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const ReportFormat format = ParseReportFormat(o.format);
  const OptiminMode mode = ParseMode(o.mode);
  const Game game = ParseGame(ReadInput(o.file, in));
  if (o.mixed && game.NumPlayers() != 2) {
    throw UnsupportedError("--mixed needs a 2-player game");
  }
  const int jobs = ResolveJobs(o.jobs);
  if (o.verbose) {
    err << "optimin: checking " << game.NumProfiles() << " profiles with "
        << jobs << " job(s)\n";
  }
  SolveReport report = CheckSuperNash(game, mode, jobs);
  if (o.mixed) {
    report.mixed = CheckMixedEquilibria(game, *report.optimin, o.support_cap);
  }
  if (format == ReportFormat::kCsv) {
    report.guarantees = GuaranteeTable(game, jobs);
  }
  out << SerializeReport(game, report, format);
  if (report.HasViolation()) {
    err << "optimin: super-Nash property violated\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimin points, guarantees and super-Nash checks for "
               "finite normal-form games"};
  app.require_subcommand(1);
  app.add_option("--jobs", o.jobs,
                 "Worker threads for profile scans (default: OPTIMIN_JOBS or "
                 "hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--verbose", o.verbose, "Progress messages on stderr");

  auto* gen = app.add_subcommand("gen", "Write a generated game document");
  gen->add_option("kind", o.gen_kind, "Game to generate")
      ->required()
      ->check(CLI::IsMember({"figure1", "pd-stage", "traveler", "pd-repeated"}));
  gen->add_option("--low", o.low, "Traveler: lowest claim")->capture_default_str();
  gen->add_option("--high", o.high, "Traveler: highest claim")->capture_default_str();
  gen->add_option("--reward", o.reward, "Traveler: reward r > 1 (N or N/D)")
      ->capture_default_str();
  gen->add_option("--rounds", o.rounds, "Repeated PD: horizon T")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen->add_option("--strategies", o.strategies,
                  "Repeated PD: comma-separated strategies (AllC, AllD, TFT, "
                  "Grim, EndDefector(k))")
      ->capture_default_str();
  gen->add_option("--out", o.out, "Output path, - for stdout")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Analyse a game document");
  solve->add_option("file", o.file, "Game document, - for stdin")->required();
  solve->add_flag("--optimin", o.optimin, "Optimin profiles");
  solve->add_flag("--nash", o.nash, "Pure Nash equilibria");
  solve->add_flag("--maximin", o.maximin, "Pure maximin values");
  solve->add_flag("--guarantees", o.guarantees, "Guarantee vector of every profile");
  solve->add_option("--mode", o.mode, "Optimin mode")
      ->check(CLI::IsMember({"pareto", "simultaneous"}))
      ->capture_default_str();
  solve->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Verify a property on a game document");
  check->add_option("property", o.check_kind, "Property to check")
      ->required()
      ->check(CLI::IsMember({"super-nash"}));
  check->add_option("file", o.file, "Game document, - for stdin")->required();
  check->add_option("--mode", o.mode, "Optimin mode")
      ->check(CLI::IsMember({"pareto", "simultaneous"}))
      ->capture_default_str();
  check->add_flag("--mixed", o.mixed,
                  "Also check mixed equilibria (2-player games)");
  check->add_option("--support-cap", o.support_cap,
                    "Max strategies per player for support enumeration")
      ->capture_default_str()
      ->check(CLI::Range(1, 16));
  check->add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();

  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.emplace_back("optimin");
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const Game game = Generate(o);
      WriteOutput(o.out, SerializeGame(game), out);
      return kExitOk;
    }
    if (solve->parsed()) return RunSolve(o, in, out, err);
    return RunCheck(o, in, out, err);
  } catch (const UnsupportedError& e) {
    err << "optimin: unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ParseError& e) {
    err << "optimin: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ValidationError& e) {
    err << "optimin: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace optimin
