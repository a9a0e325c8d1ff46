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

#include "optimin/io.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "optimin/errors.h"

namespace optimin {
namespace {

using Json = nlohmann::ordered_json;

std::string At(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const Json& Field(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError("missing required field", std::string("$.") + key);
  }
  return *it;
}

std::string ExpectString(const Json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError("expected a string", path);
  return value.get<std::string>();
}

std::vector<std::string> ExpectStringList(const Json& value,
                                          const std::string& path) {
  if (!value.is_array()) throw ParseError("expected an array", path);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(ExpectString(value[k], At(path, k)));
  }
  return out;
}

Json Strings(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.ToString());
  return out;
}

Json ProfileJson(const Game& game, const PureProfile& profile) {
  Json labels = Json::array();
  for (std::size_t p = 0; p < profile.size(); ++p) {
    labels.push_back(game.StrategyLabel(static_cast<int>(p), profile[p]));
  }
  return labels;
}

Json GuaranteeJson(const Game& game, const GuaranteeVector& g) {
  Json out;
  out["profile"] = ProfileJson(game, g.profile);
  out["indices"] = g.profile.indices();
  out["guarantees"] = Strings(g.values);
  return out;
}

Json ReportJson(const Game& game, const SolveReport& report) {
  Json out;
  out["game"] = game.title();
  out["players"] = game.player_names();
  out["mode"] = std::string(ModeName(report.mode));
  if (report.optimin) {
    Json list = Json::array();
    for (const auto& g : *report.optimin) list.push_back(GuaranteeJson(game, g));
    out["optimin"] = std::move(list);
  }
  if (report.nash) {
    Json list = Json::array();
    for (const auto& q : *report.nash) {
      Json e;
      e["profile"] = ProfileJson(game, q);
      e["indices"] = q.indices();
      e["payoffs"] = Strings(Payoff(game, q));
      list.push_back(std::move(e));
    }
    out["nash"] = std::move(list);
  }
  if (report.maximin) {
    Json list = Json::array();
    for (std::size_t p = 0; p < report.maximin->size(); ++p) {
      const auto& m = (*report.maximin)[p];
      Json e;
      e["player"] = game.player_names()[p];
      e["value"] = m.value.ToString();
      Json labels = Json::array();
      for (int s : m.strategies) {
        labels.push_back(game.StrategyLabel(static_cast<int>(p), s));
      }
      e["strategies"] = std::move(labels);
      list.push_back(std::move(e));
    }
    out["maximin"] = std::move(list);
  }
  if (report.guarantees) {
    Json list = Json::array();
    for (const auto& g : *report.guarantees) {
      list.push_back(GuaranteeJson(game, g));
    }
    out["guarantees"] = std::move(list);
  }
  if (report.super_nash) {
    const auto& check = *report.super_nash;
    Json s;
    s["holds"] = !check.HasViolation();
    s["vacuous"] = check.vacuous;
    Json verdicts = Json::array();
    for (const auto& v : check.verdicts) {
      Json e;
      e["nash"] = ProfileJson(game, v.nash);
      e["nash_payoffs"] = Strings(v.nash_payoffs);
      e["witness"] = v.witness ? GuaranteeJson(game, *v.witness) : Json();
      e["componentwise_ok"] = v.componentwise_ok;
      e["strict_for_all"] = v.strict_for_all;
      verdicts.push_back(std::move(e));
    }
    s["verdicts"] = std::move(verdicts);
    Json violations = Json::array();
    for (const auto& v : check.pareto_violations) {
      Json e;
      e["nash"] = ProfileJson(game, v.nash);
      e["optimin"] = ProfileJson(game, v.optimin);
      violations.push_back(std::move(e));
    }
    s["pareto_violations"] = std::move(violations);
    out["super_nash"] = std::move(s);
  }
  if (report.mixed) {
    Json m;
    m["holds"] = !report.mixed->HasViolation();
    m["degenerate"] = report.mixed->degenerate;
    Json verdicts = Json::array();
    for (const auto& v : report.mixed->verdicts) {
      Json e;
      Json eq = Json::array();
      for (const auto& d : v.equilibrium.distributions()) eq.push_back(Strings(d));
      e["equilibrium"] = std::move(eq);
      e["payoffs"] = Strings(v.payoffs);
      e["guarantees"] = Strings(v.guarantees);
      e["guarantee_equals_payoff"] = v.guarantee_equals_payoff;
      e["pure_witness"] =
          v.pure_witness ? GuaranteeJson(game, *v.pure_witness) : Json();
      e["strict_for_all"] = v.strict_for_all;
      verdicts.push_back(std::move(e));
    }
    m["verdicts"] = std::move(verdicts);
    out["mixed"] = std::move(m);
  }
  return out;
}

void GuaranteeGrid(const Game& game,
                   const std::vector<GuaranteeVector>& table,
                   std::ostringstream& os) {
  const int rows = game.NumStrategies(0);
  const int cols = game.NumStrategies(1);
  std::vector<std::vector<std::string>> cells(rows,
                                              std::vector<std::string>(cols));
  for (const auto& g : table) {
    cells[g.profile[0]][g.profile[1]] = VectorToString(g.values);
  }
  std::size_t label_width = 0;
  for (int r = 0; r < rows; ++r) {
    label_width = std::max(label_width, game.StrategyLabel(0, r).size());
  }
  std::vector<std::size_t> width(cols);
  for (int c = 0; c < cols; ++c) {
    width[c] = game.StrategyLabel(1, c).size();
    for (int r = 0; r < rows; ++r) width[c] = std::max(width[c], cells[r][c].size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  os << pad("", label_width);
  for (int c = 0; c < cols; ++c) {
    os << " | " << pad(game.StrategyLabel(1, c), width[c]);
  }
  os << " |\n";
  for (int r = 0; r < rows; ++r) {
    os << pad(game.StrategyLabel(0, r), label_width);
    for (int c = 0; c < cols; ++c) os << " | " << pad(cells[r][c], width[c]);
    os << " |\n";
  }
}

std::string ReportTable(const Game& game, const SolveReport& report) {
  std::ostringstream os;
  os << game.title() << "\n";
  if (report.guarantees) {
    os << "\nMinimal payoffs under profitable deviations:\n";
    if (game.NumPlayers() == 2) {
      GuaranteeGrid(game, *report.guarantees, os);
    } else {
      for (const auto& g : *report.guarantees) {
        os << ProfileToString(game, g.profile) << " "
           << VectorToString(g.values) << "\n";
      }
    }
  }
  if (report.optimin) {
    os << "\nOptimin (" << ModeName(report.mode) << "):";
    if (report.optimin->empty()) os << " none";
    os << "\n";
    for (const auto& g : *report.optimin) {
      os << "  " << ProfileToString(game, g.profile) << " guarantees "
         << VectorToString(g.values) << "\n";
    }
  }
  if (report.nash) {
    os << "\nPure Nash equilibria:";
    if (report.nash->empty()) os << " none";
    os << "\n";
    for (const auto& q : *report.nash) {
      os << "  " << ProfileToString(game, q) << " payoffs "
         << VectorToString(Payoff(game, q)) << "\n";
    }
  }
  if (report.maximin) {
    os << "\nMaximin:\n";
    for (std::size_t p = 0; p < report.maximin->size(); ++p) {
      const auto& m = (*report.maximin)[p];
      os << "  " << game.player_names()[p] << ": " << m.value << " via ";
      for (std::size_t k = 0; k < m.strategies.size(); ++k) {
        if (k > 0) os << ", ";
        os << game.StrategyLabel(static_cast<int>(p), m.strategies[k]);
      }
      os << "\n";
    }
  }
  if (report.super_nash) {
    const auto& check = *report.super_nash;
    os << "\nSuper-Nash check: "
       << (check.HasViolation() ? "VIOLATED" : "holds")
       << (check.vacuous ? " (vacuous: no pure Nash equilibrium)" : "")
       << "\n";
    for (const auto& v : check.verdicts) {
      os << "  Nash " << ProfileToString(game, v.nash) << " payoffs "
         << VectorToString(v.nash_payoffs) << ": ";
      if (!v.witness) {
        os << "no optimin guarantees these payoffs\n";
        continue;
      }
      os << (v.strict_for_all ? "strict" : "weak") << " super-Nash, witness "
         << ProfileToString(game, v.witness->profile) << " guarantees "
         << VectorToString(v.witness->values) << "\n";
    }
    for (const auto& v : check.pareto_violations) {
      os << "  Pareto violation: Nash " << ProfileToString(game, v.nash)
         << " dominates optimin " << ProfileToString(game, v.optimin) << "\n";
    }
  }
  if (report.mixed) {
    os << "\nMixed equilibria:" << (report.mixed->degenerate ? " (degenerate game)" : "")
       << "\n";
    for (const auto& v : report.mixed->verdicts) {
      os << "  (";
      for (std::size_t p = 0; p < v.equilibrium.size(); ++p) {
        if (p > 0) os << ", ";
        os << VectorToString(v.equilibrium[p]);
      }
      os << ") payoffs " << VectorToString(v.payoffs) << " guarantees "
         << VectorToString(v.guarantees)
         << (v.guarantee_equals_payoff ? "" : " MISMATCH");
      if (v.pure_witness) {
        os << ", pure witness " << ProfileToString(game, v.pure_witness->profile)
           << (v.strict_for_all ? " (strict)" : " (weak)");
      } else {
        os << ", no pure witness";
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string ReportCsv(const Game& game, const SolveReport& report) {
  if (!report.guarantees) {
    throw ValidationError("csv reports need the guarantees section");
  }
  std::vector<bool> optimin(game.NumProfiles(), false);
  std::vector<bool> nash(game.NumProfiles(), false);
  if (report.optimin) {
    for (const auto& g : *report.optimin) optimin[game.ProfileIndex(g.profile)] = true;
  }
  if (report.nash) {
    for (const auto& q : *report.nash) nash[game.ProfileIndex(q)] = true;
  }
  std::ostringstream os;
  os << "index";
  for (const auto& name : game.player_names()) os << "," << CsvField(name);
  for (const auto& name : game.player_names()) {
    os << "," << CsvField("guarantee " + name);
  }
  if (report.optimin) os << ",optimin";
  if (report.nash) os << ",nash";
  os << "\n";
  for (const auto& g : *report.guarantees) {
    const std::size_t index = game.ProfileIndex(g.profile);
    os << index;
    for (std::size_t p = 0; p < g.profile.size(); ++p) {
      os << "," << CsvField(game.StrategyLabel(static_cast<int>(p), g.profile[p]));
    }
    for (const auto& v : g.values) os << "," << v;
    if (report.optimin) os << "," << (optimin[index] ? 1 : 0);
    if (report.nash) os << "," << (nash[index] ? 1 : 0);
    os << "\n";
  }
  return os.str();
}

}  // namespace

Game ParseGame(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "$");
  }
  if (!doc.is_object()) throw ParseError("expected an object", "$");

  const Json& version = Field(doc, "schema_version");
  if (!version.is_number_integer()) {
    throw ParseError("expected an integer", "$.schema_version");
  }
  if (version.get<long long>() != kSchemaVersion) {
    throw ParseError("unknown schema version " + version.dump(),
                     "$.schema_version");
  }
  if (const auto it = doc.find("index_order"); it != doc.end()) {
    if (ExpectString(*it, "$.index_order") != kIndexOrder) {
      throw ParseError("unsupported index order", "$.index_order");
    }
  }
  std::string title;
  if (const auto it = doc.find("title"); it != doc.end()) {
    title = ExpectString(*it, "$.title");
  }
  auto players = ExpectStringList(Field(doc, "players"), "$.players");
  if (players.empty()) throw ParseError("need at least one player", "$.players");

  const Json& strategies = Field(doc, "strategies");
  if (!strategies.is_array()) throw ParseError("expected an array", "$.strategies");
  if (strategies.size() != players.size()) {
    throw ParseError("expected one strategy list per player", "$.strategies");
  }
  std::vector<std::vector<std::string>> labels;
  std::size_t cells = 1;
  for (std::size_t p = 0; p < strategies.size(); ++p) {
    labels.push_back(ExpectStringList(strategies[p], At("$.strategies", p)));
    if (labels.back().empty()) {
      throw ParseError("empty strategy set", At("$.strategies", p));
    }
    cells *= labels.back().size();
  }

  const Json& payoffs = Field(doc, "payoffs");
  if (!payoffs.is_array()) throw ParseError("expected an array", "$.payoffs");
  if (payoffs.size() != cells) {
    throw ParseError("dimension mismatch: " + std::to_string(payoffs.size()) +
                         " cells for " + std::to_string(cells) + " profiles",
                     "$.payoffs");
  }
  std::vector<Rational> flat;
  flat.reserve(cells * players.size());
  for (std::size_t k = 0; k < cells; ++k) {
    const std::string cell_path = At("$.payoffs", k);
    const Json& cell = payoffs[k];
    if (!cell.is_array() || cell.size() != players.size()) {
      throw ParseError("expected " + std::to_string(players.size()) +
                           " payoffs",
                       cell_path);
    }
    for (std::size_t p = 0; p < cell.size(); ++p) {
      const std::string path = At(cell_path, p);
      try {
        flat.push_back(Rational::Parse(ExpectString(cell[p], path)));
      } catch (const ParseError& e) {
        if (!e.path().empty()) throw;
        throw ParseError(e.what(), path);
      }
    }
  }
  try {
    return Game(std::move(title), std::move(players), std::move(labels),
                std::move(flat));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), "$");
  }
}

std::string SerializeGame(const Game& game) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["index_order"] = std::string(kIndexOrder);
  doc["title"] = game.title();
  doc["players"] = game.player_names();
  doc["strategies"] = game.strategy_labels();
  Json payoffs = Json::array();
  const int n = game.NumPlayers();
  for (std::size_t cell = 0; cell < game.NumProfiles(); ++cell) {
    Json row = Json::array();
    for (int p = 0; p < n; ++p) row.push_back(game.PayoffAt(cell, p).ToString());
    payoffs.push_back(std::move(row));
  }
  doc["payoffs"] = std::move(payoffs);
  return doc.dump(2) + "\n";
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  throw ValidationError("unknown report format \"" + std::string(name) + "\"");
}

std::string SerializeReport(const Game& game, const SolveReport& report,
                            ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return ReportJson(game, report).dump(2) + "\n";
    case ReportFormat::kTable:
      return ReportTable(game, report);
    case ReportFormat::kCsv:
      return ReportCsv(game, report);
  }
  return {};
}

}  // namespace optimin
