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

#ifndef OPTIMIN_IO_H_
#define OPTIMIN_IO_H_

#include <string>
#include <string_view>

#include "optimin/game.h"
#include "optimin/solvers.h"

namespace optimin {

// Game documents are JSON:
//
//   {
//     "schema_version": 1,
//     "index_order": "row-major, player 1 index slowest",
//     "title": "...",
//     "players": ["Player 1", ...],
//     "strategies": [["Top", ...], ...],
//     "payoffs": [["100", "100"], ...]
//   }
//
// `payoffs` lists one cell per pure profile in row-major order (first
// player's index varies slowest); each cell holds one canonical rational
// string ("N" or "N/D") per player. `index_order` is optional on input but
// must match when present.
inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kIndexOrder =
    "row-major, player 1 index slowest";

// Throws ParseError whose path() names the offending field.
Game ParseGame(std::string_view text);
// Canonical document; ParseGame(SerializeGame(g)) == g.
std::string SerializeGame(const Game& game);

enum class ReportFormat { kJson, kTable, kCsv };
// "json", "table" or "csv"; throws ValidationError otherwise.
ReportFormat ParseReportFormat(std::string_view name);

// Renders the populated sections of a report. The table format lays out
// 2-player guarantee tables as a strategy grid; csv emits one row per
// profile and requires the guarantees section (ValidationError otherwise).
std::string SerializeReport(const Game& game, const SolveReport& report,
                            ReportFormat format);

}  // namespace optimin

#endif  // OPTIMIN_IO_H_
