// Copyright 2026 The jamgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JAMGAME_HARNESS_CSV_H_
#define JAMGAME_HARNESS_CSV_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace jamgame::harness {

using Cell = std::variant<double, std::int64_t, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Index of a column by name, or -1.
  int ColumnIndex(const std::string& name) const;
};

// 17 significant digits, independent of the global locale.
std::string FormatDouble(double x);
std::string FormatCell(const Cell& cell);

// RFC 4180 field quoting.
std::string QuoteField(const std::string& field);

std::string ToCsv(const ResultTable& table);
void EmitCsv(const ResultTable& table, const std::filesystem::path& path);

}  // namespace jamgame::harness

#endif  // JAMGAME_HARNESS_CSV_H_
