// Copyright 2026 The CoG Toolkit Authors.
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

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "cog/corpus/text.hpp"
#include "cog/error.hpp"
#include "cog/schema.hpp"

namespace cog::corpus {

enum class SeedFormat { kJsonl, kCsv };

inline SeedFormat parse_seed_format(std::string_view s) {
  if (s == "jsonl") return SeedFormat::kJsonl;
  if (s == "csv") return SeedFormat::kCsv;
  throw UsageError("unknown seed format: " + std::string(s));
}

struct FieldMapping {
  std::string question_field = "question";
  std::string answer_field = "answer";
  std::string id_field = "id";  // optional in the data
};

struct IngestReject {
  std::size_t line = 0;
  std::string reason;
};

struct IngestResult {
  std::vector<QAPair> pairs;
  std::vector<IngestReject> rejects;
};

/// One CSV record with the physical line it started on.
struct CsvRecord {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// RFC 4180 reader: quoted fields may hold commas, doubled quotes and
/// newlines. Blank lines are skipped.
inline std::vector<CsvRecord> read_csv(std::istream& in) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  current.line = 1;
  auto end_record = [&] {
    if (field_started || !current.fields.empty()) {
      current.fields.push_back(std::move(field));
      records.push_back(std::move(current));
    }
    current = CsvRecord{};
    field.clear();
    field_started = false;
  };
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (current.line == 0) current.line = line;
    switch (c) {
      case '"':
        quoted = true;
        field_started = true;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (quoted) throw DataError("unterminated quoted CSV field starting near line " + std::to_string(current.line));
  end_record();
  return records;
}

namespace detail {

inline std::optional<std::string> json_text(const nlohmann::json& row, const std::string& field) {
  const auto it = row.find(field);
  if (it == row.end()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number()) return it->dump();
  if (it->is_null()) return std::string{};
  throw DataError("field '" + field + "' is not text");
}

// Shared tail of both formats: blank fields and duplicate ids are rejected
// with their line numbers.
inline void admit(IngestResult& out, std::unordered_set<std::string>& ids, std::size_t line, QAPair pair) {
  if (is_blank(pair.question) || is_blank(pair.answer)) {
    out.rejects.push_back({line, is_blank(pair.question) ? "blank question" : "blank answer"});
    return;
  }
  if (!ids.insert(pair.id).second) {
    out.rejects.push_back({line, "duplicate id '" + pair.id + "'"});
    return;
  }
  out.pairs.push_back(std::move(pair));
}

}  // namespace detail

/// Reads a seed corpus, mapping the configured field names onto QAPairs.
/// Rows without an id get "<source>-<line>".
inline IngestResult ingest_seed(const std::string& path, SeedFormat format, const std::string& source_label,
                                const FieldMapping& mapping = {}) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open seed file " + path);
  IngestResult out;
  std::unordered_set<std::string> ids;
  auto synth_id = [&](std::size_t line) { return source_label + "-" + std::to_string(line); };

  if (format == SeedFormat::kJsonl) {
    for (const auto& row : read_jsonl(path)) {
      const auto where = path + ":" + std::to_string(row.line_number);
      if (!row.value.is_object()) throw DataError(where + ": expected a JSON object");
      const auto q = detail::json_text(row.value, mapping.question_field);
      const auto a = detail::json_text(row.value, mapping.answer_field);
      if (!q) throw DataError(where + ": missing field '" + mapping.question_field + "'");
      if (!a) throw DataError(where + ": missing field '" + mapping.answer_field + "'");
      auto id = detail::json_text(row.value, mapping.id_field);
      if (!id || id->empty()) id = synth_id(row.line_number);
      detail::admit(out, ids, row.line_number, {*id, *q, *a, source_label});
    }
    return out;
  }

  const auto records = read_csv(in);
  if (records.empty()) throw DataError(path + ": empty CSV");
  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i) column.emplace(std::string(trim(records[0].fields[i])), i);
  auto require = [&](const std::string& name) {
    const auto it = column.find(name);
    if (it == column.end()) throw DataError(path + ": missing column '" + name + "'");
    return it->second;
  };
  const auto qcol = require(mapping.question_field);
  const auto acol = require(mapping.answer_field);
  const auto idcol = column.contains(mapping.id_field) ? std::optional(column.at(mapping.id_field)) : std::nullopt;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    auto get = [&](std::size_t col) { return col < rec.fields.size() ? rec.fields[col] : std::string{}; };
    std::string id = idcol ? get(*idcol) : std::string{};
    if (id.empty()) id = synth_id(rec.line);
    detail::admit(out, ids, rec.line, {id, get(qcol), get(acol), source_label});
  }
  return out;
}

}  // namespace cog::corpus
