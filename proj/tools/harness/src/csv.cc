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

#include "jamgame/harness/csv.h"

#include <charconv>
#include <cmath>
#include <system_error>

#include "jamgame/harness/scenario.h"

namespace jamgame::harness {

int ResultTable::ColumnIndex(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string FormatDouble(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x,
                                    std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::string FormatCell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return FormatDouble(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

std::string QuoteField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string ToCsv(const ResultTable& table) {
  std::string out;
  auto emit_row = [&](const auto& cells, auto&& format) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += QuoteField(format(cells[i]));
    }
    out += '\n';
  };
  emit_row(table.columns, [](const std::string& s) { return s; });
  for (const auto& row : table.rows) {
    emit_row(row, [](const Cell& c) { return FormatCell(c); });
  }
  return out;
}

void EmitCsv(const ResultTable& table, const std::filesystem::path& path) {
  WriteFile(path, ToCsv(table));
}

}  // namespace jamgame::harness
