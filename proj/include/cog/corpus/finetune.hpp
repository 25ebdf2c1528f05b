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

#include <string>
#include <vector>

#include <json.hpp>

#include "cog/error.hpp"
#include "cog/schema.hpp"

namespace cog::corpus {

struct EmissionSummary {
  std::size_t records = 0;
  std::size_t dont_know_fallbacks = 0;
  std::size_t parse_failure_fallbacks = 0;
};

/// One chat record per variant:
///   {"messages": [{"role": "user", ...}, {"role": "assistant", ...}],
///    "meta": {"seed_id", "variant_index", "technique", "selection"}}
inline nlohmann::json finetune_record(const VariantRecord& v) {
  return {
      {"messages",
       nlohmann::json::array({{{"role", "user"}, {"content", v.question}},
                              {{"role", "assistant"}, {"content", v.final_answer}}})},
      {"meta",
       {{"seed_id", v.seed_id},
        {"variant_index", v.variant_index},
        {"technique", v.technique ? nlohmann::json(code(*v.technique)) : nlohmann::json(nullptr)},
        {"selection", to_string(v.selection)}}},
  };
}

inline EmissionSummary emit_finetune_corpus(const std::vector<ExpandedSet>& sets, const std::string& path) {
  if (sets.empty()) throw UsageError("no expanded sets to emit");
  EmissionSummary summary;
  std::vector<nlohmann::json> rows;
  for (const auto& set : sets) {
    for (const auto& v : set.variants) {
      rows.push_back(finetune_record(v));
      if (v.selection.kind == Selection::Kind::kDontKnowFallback) ++summary.dont_know_fallbacks;
      if (v.selection.kind == Selection::Kind::kParseFailureFallback) ++summary.parse_failure_fallbacks;
    }
  }
  write_jsonl(path, rows);
  summary.records = rows.size();
  return summary;
}

}  // namespace cog::corpus
