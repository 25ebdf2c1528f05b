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

#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cog/corpus/text.hpp"
#include "cog/error.hpp"

namespace cog {

using json = nlohmann::json;

/// One question with its reference answer; the atom of every dataset.
struct QAPair {
  std::string id;
  std::string question;
  std::string answer;
  std::string source;

  bool operator==(const QAPair&) const = default;
};

/// The four rewriting strategies of the paraphrase prompt, numbered as the
/// prompt numbers them.
enum class ParaphraseTechnique : int {
  kSynonyms = 1,
  kWordForms = 2,
  kSentenceStructure = 3,
  kConjunctions = 4,
};

inline constexpr std::array<ParaphraseTechnique, 4> kAllTechniques = {
    ParaphraseTechnique::kSynonyms, ParaphraseTechnique::kWordForms,
    ParaphraseTechnique::kSentenceStructure, ParaphraseTechnique::kConjunctions};

inline int code(ParaphraseTechnique t) { return static_cast<int>(t); }

inline std::string_view label(ParaphraseTechnique t) {
  switch (t) {
    case ParaphraseTechnique::kSynonyms: return "synonyms";
    case ParaphraseTechnique::kWordForms: return "word-forms";
    case ParaphraseTechnique::kSentenceStructure: return "sentence-structure";
    case ParaphraseTechnique::kConjunctions: return "conjunctions";
  }
  return "";
}

inline ParaphraseTechnique technique_from_code(int c) {
  if (c < 1 || c > 4) throw UsageError("paraphrase technique code out of range: " + std::to_string(c));
  return static_cast<ParaphraseTechnique>(c);
}

inline ParaphraseTechnique technique_from_label(std::string_view l) {
  for (auto t : kAllTechniques) {
    if (label(t) == l) return t;
  }
  throw UsageError("unknown paraphrase technique: " + std::string(l));
}

/// How a variant's final answer was chosen.
struct Selection {
  enum class Kind { kOriginalKept, kRanked, kDontKnowFallback, kParseFailureFallback };

  Kind kind = Kind::kOriginalKept;
  int option_index = 0;  // 1-based, only meaningful for kRanked

  static Selection original_kept() { return {Kind::kOriginalKept, 0}; }
  static Selection ranked(int j) { return {Kind::kRanked, j}; }
  static Selection dont_know_fallback() { return {Kind::kDontKnowFallback, 0}; }
  static Selection parse_failure_fallback() { return {Kind::kParseFailureFallback, 0}; }

  bool operator==(const Selection&) const = default;
};

inline std::string to_string(const Selection& s) {
  switch (s.kind) {
    case Selection::Kind::kOriginalKept: return "original-kept";
    case Selection::Kind::kRanked: return "ranked(" + std::to_string(s.option_index) + ")";
    case Selection::Kind::kDontKnowFallback: return "dont-know-fallback";
    case Selection::Kind::kParseFailureFallback: return "parse-failure-fallback";
  }
  return "";
}

inline Selection parse_selection(std::string_view text) {
  if (text == "original-kept") return Selection::original_kept();
  if (text == "dont-know-fallback") return Selection::dont_know_fallback();
  if (text == "parse-failure-fallback") return Selection::parse_failure_fallback();
  constexpr std::string_view prefix = "ranked(";
  if (text.starts_with(prefix) && text.ends_with(")") && text.size() > prefix.size() + 1) {
    auto digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    int j = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw DataError("bad selection: " + std::string(text));
      j = j * 10 + (c - '0');
    }
    if (j >= 1) return Selection::ranked(j);
  }
  throw DataError("bad selection: " + std::string(text));
}

/// One member z_i of an expanded set. Variant 0 is the seed pair itself.
struct VariantRecord {
  std::string seed_id;
  int variant_index = 0;
  std::optional<ParaphraseTechnique> technique;
  std::string question;
  std::optional<std::string> preliminary_answer;
  std::optional<std::string> brief_answer;
  std::string final_answer;
  Selection selection;

  bool operator==(const VariantRecord&) const = default;
};

struct ExpandedSet {
  QAPair seed;
  std::vector<VariantRecord> variants;
  // Surviving paraphrases; zero only for a seed whose paraphrase stage failed.
  int n_paraphrases = 0;

  bool operator==(const ExpandedSet&) const = default;
};

struct ConsistencyReport {
  std::string backend;
  std::string run_label;
  std::map<std::string, double> per_question;
  double corpus_mean = 0.0;
  std::size_t pair_count = 0;
  std::size_t skipped_groups = 0;
  bool low_discrimination = false;
  json manifest = json::object();

  bool operator==(const ConsistencyReport&) const = default;
};

struct ValidationSummary {
  std::size_t valid = 0;
  std::size_t empty_field_rejects = 0;
  std::size_t duplicate_id_rejects = 0;
  // Input positions of rejected pairs, in input order.
  std::vector<std::size_t> rejected_positions;
};

inline ValidationSummary validate_corpus(const std::vector<QAPair>& pairs) {
  ValidationSummary summary;
  std::set<std::string_view> ids;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (corpus::is_blank(p.question) || corpus::is_blank(p.answer)) {
      ++summary.empty_field_rejects;
      summary.rejected_positions.push_back(i);
    } else if (!ids.insert(p.id).second) {
      ++summary.duplicate_id_rejects;
      summary.rejected_positions.push_back(i);
    } else {
      ++summary.valid;
    }
  }
  return summary;
}

/// Throws DataError if the set breaks any ExpandedSet invariant.
inline void check_expanded_set(const ExpandedSet& set) {
  const auto fail = [&](const std::string& why) {
    throw DataError("expanded set '" + set.seed.id + "': " + why);
  };
  if (set.variants.size() != static_cast<std::size_t>(set.n_paraphrases) + 1)
    fail("variant count does not equal n_paraphrases + 1");
  std::set<std::string> questions;
  for (std::size_t i = 0; i < set.variants.size(); ++i) {
    const auto& v = set.variants[i];
    if (v.variant_index != static_cast<int>(i)) fail("variant indices are not contiguous");
    if (i == 0) {
      if (v.question != set.seed.question || v.final_answer != set.seed.answer ||
          v.selection != Selection::original_kept() || v.technique)
        fail("variant 0 differs from the seed");
    } else if (!v.technique) {
      fail("paraphrase variant without technique");
    }
    if (!questions.insert(corpus::normalize(v.question)).second)
      fail("duplicate normalized question");
  }
}

// --- JSON ---------------------------------------------------------------

inline void to_json(json& j, const QAPair& p) {
  j = json{{"id", p.id}, {"question", p.question}, {"answer", p.answer}, {"source", p.source}};
}

inline void from_json(const json& j, QAPair& p) {
  j.at("id").get_to(p.id);
  j.at("question").get_to(p.question);
  j.at("answer").get_to(p.answer);
  p.source = j.value("source", std::string{});
}

inline json optional_text(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

inline std::optional<std::string> optional_text(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

inline void to_json(json& j, const VariantRecord& v) {
  j = json{{"seed_id", v.seed_id},
           {"variant_index", v.variant_index},
           {"technique", v.technique ? json(code(*v.technique)) : json(nullptr)},
           {"question", v.question},
           {"preliminary_answer", optional_text(v.preliminary_answer)},
           {"brief_answer", optional_text(v.brief_answer)},
           {"final_answer", v.final_answer},
           {"selection", to_string(v.selection)}};
}

inline void from_json(const json& j, VariantRecord& v) {
  j.at("seed_id").get_to(v.seed_id);
  j.at("variant_index").get_to(v.variant_index);
  const auto& t = j.at("technique");
  v.technique = t.is_null() ? std::nullopt
                            : std::optional<ParaphraseTechnique>(technique_from_code(t.get<int>()));
  j.at("question").get_to(v.question);
  v.preliminary_answer = optional_text(j.value("preliminary_answer", json(nullptr)));
  v.brief_answer = optional_text(j.value("brief_answer", json(nullptr)));
  j.at("final_answer").get_to(v.final_answer);
  v.selection = parse_selection(j.at("selection").get<std::string>());
}

inline void to_json(json& j, const ConsistencyReport& r) {
  j = json{{"backend", r.backend},
           {"run_label", r.run_label},
           {"per_question", r.per_question},
           {"corpus_mean", r.corpus_mean},
           {"pair_count", r.pair_count},
           {"skipped_groups", r.skipped_groups},
           {"low_discrimination", r.low_discrimination},
           {"manifest", r.manifest}};
}

inline void from_json(const json& j, ConsistencyReport& r) {
  j.at("backend").get_to(r.backend);
  j.at("run_label").get_to(r.run_label);
  j.at("per_question").get_to(r.per_question);
  j.at("corpus_mean").get_to(r.corpus_mean);
  j.at("pair_count").get_to(r.pair_count);
  j.at("skipped_groups").get_to(r.skipped_groups);
  r.low_discrimination = j.value("low_discrimination", false);
  r.manifest = j.value("manifest", json::object());
}

// --- JSON-lines files ---------------------------------------------------

struct JsonLine {
  std::size_t line_number = 0;  // 1-based
  json value;
};

inline std::vector<JsonLine> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::vector<JsonLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (corpus::is_blank(line)) continue;
    try {
      out.push_back({number, json::parse(line)});
    } catch (const json::parse_error& e) {
      throw DataError(path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

inline void write_jsonl(const std::string& path, const std::vector<json>& rows) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write " + path);
  for (const auto& row : rows) out << row.dump() << '\n';
  if (!out) throw DataError("write failed: " + path);
}

inline std::vector<QAPair> read_seed_file(const std::string& path) {
  std::vector<QAPair> pairs;
  for (const auto& row : read_jsonl(path)) {
    try {
      pairs.push_back(row.value.get<QAPair>());
    } catch (const json::exception& e) {
      throw DataError(path + ":" + std::to_string(row.line_number) + ": " + e.what());
    }
  }
  return pairs;
}

inline void write_seed_file(const std::string& path, const std::vector<QAPair>& pairs) {
  std::vector<json> rows(pairs.begin(), pairs.end());
  write_jsonl(path, rows);
}

// Expanded-set lines also echo n_paraphrases and the seed's source so a file
// can be regrouped into ExpandedSets without the seed corpus.
inline std::vector<json> expanded_set_lines(const ExpandedSet& set) {
  std::vector<json> rows;
  for (const auto& v : set.variants) {
    json row = v;
    row["n_paraphrases"] = set.n_paraphrases;
    row["source"] = set.seed.source;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_expanded_file(const std::string& path, const std::vector<ExpandedSet>& sets) {
  std::vector<json> rows;
  for (const auto& set : sets) {
    auto lines = expanded_set_lines(set);
    rows.insert(rows.end(), lines.begin(), lines.end());
  }
  write_jsonl(path, rows);
}

inline std::vector<ExpandedSet> parse_expanded_lines(const std::vector<JsonLine>& rows) {
  std::vector<ExpandedSet> sets;
  for (const auto& row : rows) {
    VariantRecord v;
    try {
      v = row.value.get<VariantRecord>();
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(row.line_number) + ": " + e.what());
    }
    if (v.variant_index == 0) {
      ExpandedSet set;
      set.seed = {v.seed_id, v.question, v.final_answer, row.value.value("source", std::string{})};
      set.n_paraphrases = row.value.value("n_paraphrases", 0);
      sets.push_back(std::move(set));
    } else if (sets.empty() || sets.back().seed.id != v.seed_id) {
      throw DataError("line " + std::to_string(row.line_number) +
                      ": variant appears before its original (variant_index 0)");
    }
    sets.back().variants.push_back(std::move(v));
  }
  for (const auto& set : sets) check_expanded_set(set);
  return sets;
}

inline std::vector<ExpandedSet> read_expanded_file(const std::string& path) {
  return parse_expanded_lines(read_jsonl(path));
}

}  // namespace cog
