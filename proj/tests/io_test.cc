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


#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "optimin/errors.h"
#include "optimin/generators.h"
#include "optimin/io.h"
#include "oracle.h"

namespace optimin {
namespace {

std::string ReadFixture(const std::string& name) {
  std::ifstream in(std::string(OPTIMIN_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ParseErrorPath(const std::string& text) {
  try {
    ParseGame(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST_CASE("shipped fixtures parse to the generated games") {
  CHECK(ParseGame(ReadFixture("figure1.json")) == Figure1Game());
  CHECK(ParseGame(ReadFixture("pd_stage.json")) == PrisonersDilemmaStage());
  CHECK(ParseGame(ReadFixture("traveler_r2.json")) == TravelersDilemma({}));
  // The fixtures are canonical documents.
  CHECK(SerializeGame(Figure1Game()) == ReadFixture("figure1.json"));
}

TEST_CASE("round trip is exact") {
  const Game pd = PrisonersDilemmaStage();
  CHECK(ParseGame(SerializeGame(pd)) == pd);
  const Game t = TravelersDilemma({2, 9, Rational(5, 3)});
  CHECK(ParseGame(SerializeGame(t)) == t);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 20; ++k) {
    const Game g = oracle::RandomGame(rng, oracle::RandomShape(rng));
    const std::string text = SerializeGame(g);
    CHECK(ParseGame(text) == g);
    CHECK(SerializeGame(ParseGame(text)) == text);
  }
}

TEST_CASE("parse errors name the offending field") {
  const std::string good = SerializeGame(Figure1Game());
  auto doc = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    const auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
  };
  // Drop the last cell: 8 cells for a 3x3 game.
  const auto last = good.rfind(",\n    [");
  std::string eight = good.substr(0, last) + "\n  ]\n}\n";
  CHECK(ParseErrorPath(eight) == "$.payoffs");
  CHECK(ParseErrorPath(doc("\"105\"", "\"5/0\"")) == "$.payoffs[1][1]");
  CHECK(ParseErrorPath(doc("\"105\"", "\"10/2\"")) == "$.payoffs[1][1]");
  CHECK(ParseErrorPath(doc("\"105\"", "105")) == "$.payoffs[1][1]");
  CHECK(ParseErrorPath(doc("\"schema_version\": 1", "\"schema_version\": 2")) ==
        "$.schema_version");
  CHECK(ParseErrorPath(doc("\"Left\"", "7")) == "$.strategies[1][0]");
  CHECK(ParseErrorPath("{\"schema_version\": 1") == "$");
  CHECK(ParseErrorPath("[]") == "$");
  CHECK(ParseErrorPath("{\"schema_version\": 1}") == "$.players");
}

TEST_CASE("table report lays out guarantees like a payoff matrix") {
  const Game g = Figure1Game();
  SolveReport report;
  report.guarantees = GuaranteeTable(g);
  const std::string table = SerializeReport(g, report, ReportFormat::kTable);
  std::istringstream lines(table);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  // title, blank, caption, header, Top, Middle, Bottom
  REQUIRE(rows.size() >= 7);
  CHECK(rows[3].find("Left") < rows[3].find("Center"));
  CHECK(rows[3].find("Center") < rows[3].find("Right"));
  CHECK(rows[4].rfind("Top", 0) == 0);
  CHECK(rows[5].rfind("Middle", 0) == 0);
  CHECK(rows[6].rfind("Bottom", 0) == 0);
  CHECK(rows[4].find("(100,100)") < rows[4].find("(100,0)"));
  CHECK(rows[6].find("(5,5)") != std::string::npos);
}

TEST_CASE("csv report has one row per profile") {
  const Game g = Figure1Game();
  SolveReport report;
  report.guarantees = GuaranteeTable(g);
  report.optimin = SelectOptimin(*report.guarantees, OptiminMode::kPareto);
  const std::string csv = SerializeReport(g, report, ReportFormat::kCsv);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "index,Player 1,Player 2,guarantee Player 1,guarantee Player 2,optimin");
  std::getline(lines, line);
  CHECK(line == "0,Top,Left,100,100,1");
  int count = 1;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 9);

  CHECK_THROWS_AS(SerializeReport(g, SolveReport{}, ReportFormat::kCsv),
                  ValidationError);
}

TEST_CASE("json report carries exact rational strings") {
  const Game g = TravelersDilemma({2, 5, Rational(3, 2)});
  const auto report = CheckSuperNash(g, OptiminMode::kPareto);
  const std::string json = SerializeReport(g, report, ReportFormat::kJson);
  CHECK(json.find("\"mode\": \"pareto\"") != std::string::npos);
  // At (5,5) the opponent undercuts to 4, leaving 4 - 3/2.
  CHECK(json.find("\"5/2\"") != std::string::npos);
  CHECK(json.find("\"holds\": true") != std::string::npos);
}

TEST_CASE("report format names") {
  CHECK(ParseReportFormat("csv") == ReportFormat::kCsv);
  CHECK_THROWS_AS(ParseReportFormat("xml"), ValidationError);
}

}  // namespace
}  // namespace optimin
