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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cog/corpus/ingest.hpp"
#include "cog/detail/parallel.hpp"
#include "cog/error.hpp"
#include "cog/gateway.hpp"
#include "cog/metrics.hpp"
#include "cog/pipeline.hpp"
#include "cog/schema.hpp"

namespace cog::harness {

enum class EvalMode { kBeforeCog, kAfterCog };

inline std::string to_string(EvalMode m) { return m == EvalMode::kBeforeCog ? "before-cog" : "after-cog"; }

struct EvalRunSpec {
  EvalMode mode = EvalMode::kBeforeCog;
  std::string seeds;  // seed corpus path, recorded in the manifest
  pipeline::CogConfig cog;
  std::vector<std::string> backends = {"rouge-l"};
  std::string output_dir = "runs";
  std::uint64_t rng_seed = 0;
};

/// Everything needed to re-derive a report, minus wall-clock time.
inline nlohmann::json run_manifest(const EvalRunSpec& spec) {
  nlohmann::json techniques = nlohmann::json::array();
  for (auto t : spec.cog.resolved_techniques()) techniques.push_back(code(t));
  nlohmann::json m = {
      {"mode", to_string(spec.mode)},
      {"seeds", spec.seeds},
      {"rng_seed", spec.rng_seed},
      {"backends", spec.backends},
      {"models",
       {{"paraphrase", spec.cog.paraphrase_model},
        {"answer", spec.cog.answer_model},
        {"rank", spec.cog.rank_model}}},
      {"n_paraphrases", spec.cog.n_paraphrases},
      {"techniques", techniques},
      {"parallelism", spec.cog.parallelism},
      {"temperature", spec.cog.temperature},
      {"max_tokens", spec.cog.max_tokens},
  };
  // Rank and shorten settings do not influence a before-CoG run.
  if (spec.mode == EvalMode::kAfterCog) {
    m["shorten_answers"] = spec.cog.shorten_answers;
    m["dont_know_policy"] = pipeline::to_string(spec.cog.dont_know_policy);
  }
  return m;
}

struct EvalResult {
  std::map<std::string, ConsistencyReport> reports;  // by backend name
  std::vector<metrics::AnswerGroup> groups;
  std::vector<ExpandedSet> sets;  // after-CoG only
  std::vector<pipeline::PipelineWarning> warnings;
};

namespace detail {

inline std::map<std::string, ConsistencyReport> score_groups(const std::vector<metrics::AnswerGroup>& groups,
                                                             const std::vector<metrics::SimilarityBackend>& backends,
                                                             const EvalRunSpec& spec) {
  if (backends.empty()) throw UsageError("no similarity backend selected");
  std::map<std::string, ConsistencyReport> reports;
  const auto manifest = run_manifest(spec);
  for (const auto& b : backends) {
    auto report = metrics::corpus_consistency(groups, b, to_string(spec.mode));
    report.manifest = manifest;
    reports[b.name()] = std::move(report);
  }
  return reports;
}

}  // namespace detail

/// Direct prompting baseline: paraphrase each seed, answer the original and
/// every paraphrase with the bare question, score each group.
inline EvalResult run_before(const std::vector<QAPair>& seeds, EvalRunSpec spec, gateway::Gateway& llm,
                             const std::vector<metrics::SimilarityBackend>& backends) {
  spec.mode = EvalMode::kBeforeCog;
  pipeline::Pipeline chain(llm, spec.cog);
  EvalResult out;
  out.groups.resize(seeds.size());
  std::vector<std::vector<pipeline::PipelineWarning>> warnings(seeds.size());
  cog::detail::parallel_for(seeds.size(), spec.cog.parallelism, [&](std::size_t i) {
    const auto& seed = seeds[i];
    auto para = chain.generate_paraphrases(seed);
    warnings[i] = para.warnings;
    std::vector<std::string> questions{seed.question};
    for (const auto& p : para.paraphrases) questions.push_back(p.question);
    const auto answers = chain.generate_preliminary_answers(questions, &warnings[i], seed.id);
    out.groups[i].id = seed.id;
    for (const auto& a : answers) {
      if (a) out.groups[i].answers.push_back(*a);
    }
  });
  for (auto& w : warnings) out.warnings.insert(out.warnings.end(), w.begin(), w.end());
  out.reports = detail::score_groups(out.groups, backends, spec);
  return out;
}

/// Full CoG, then consistency over each expanded set's final answers.
inline EvalResult run_after(const std::vector<QAPair>& seeds, EvalRunSpec spec, gateway::Gateway& llm,
                            const std::vector<metrics::SimilarityBackend>& backends) {
  spec.mode = EvalMode::kAfterCog;
  pipeline::Pipeline chain(llm, spec.cog);
  auto run = chain.run_cog(seeds);
  EvalResult out;
  out.warnings = std::move(run.warnings);
  for (const auto& set : run.sets) {
    metrics::AnswerGroup g{set.seed.id, {}};
    for (const auto& v : set.variants) g.answers.push_back(v.final_answer);
    out.groups.push_back(std::move(g));
  }
  out.sets = std::move(run.sets);
  out.reports = detail::score_groups(out.groups, backends, spec);
  return out;
}

// --- human alignment -----------------------------------------------------

/// Human labels: one row per item, one integer label per rater.
struct HumanRatings {
  std::vector<std::string> item_ids;
  std::vector<std::vector<int>> labels;
};

/// CSV with header `item_id,<rater>...`; every cell after the first is an
/// integer label.
inline HumanRatings load_ratings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open ratings file " + path);
  const auto records = corpus::read_csv(in);
  if (records.size() < 2) throw DataError(path + ": ratings file needs a header and at least one item");
  const auto width = records[0].fields.size();
  if (width < 3) throw DataError(path + ": ratings need an item column and at least two rater columns");
  HumanRatings out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != width) throw DataError(path + ":" + std::to_string(rec.line) + ": wrong column count");
    out.item_ids.push_back(rec.fields[0]);
    std::vector<int> row;
    for (std::size_t c = 1; c < width; ++c) {
      try {
        std::size_t used = 0;
        row.push_back(std::stoi(rec.fields[c], &used));
        if (used != rec.fields[c].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw DataError(path + ":" + std::to_string(rec.line) + ": label is not an integer: " + rec.fields[c]);
      }
    }
    out.labels.push_back(std::move(row));
  }
  return out;
}

struct AlignmentReport {
  std::map<std::string, std::optional<double>> spearman;  // by backend
  std::optional<double> fleiss_kappa;
  std::size_t items = 0;
  int raters = 0;
};

/// Spearman correlation of each backend's per-item scores with the mean
/// human label, plus Fleiss' kappa over the raters.
inline AlignmentReport alignment_report(const std::map<std::string, std::vector<double>>& metric_scores,
                                        const HumanRatings& ratings) {
  if (ratings.labels.empty()) throw DataError("no human ratings");
  std::set<int> distinct;
  for (const auto& row : ratings.labels) distinct.insert(row.begin(), row.end());
  const std::vector<int> categories(distinct.begin(), distinct.end());
  std::vector<std::vector<int>> indexed;
  std::vector<double> human_mean;
  for (const auto& row : ratings.labels) {
    std::vector<int> idx;
    double sum = 0.0;
    for (int label : row) {
      idx.push_back(static_cast<int>(std::lower_bound(categories.begin(), categories.end(), label) - categories.begin()));
      sum += label;
    }
    indexed.push_back(std::move(idx));
    human_mean.push_back(sum / static_cast<double>(row.size()));
  }
  const auto table = metrics::RatingTable::from_labels(indexed, static_cast<int>(categories.size()));

  AlignmentReport report;
  report.items = table.items();
  report.raters = table.raters();
  report.fleiss_kappa = metrics::fleiss_kappa(table);
  for (const auto& [backend, scores] : metric_scores) {
    if (scores.size() != human_mean.size())
      throw DataError("backend '" + backend + "' has " + std::to_string(scores.size()) + " scores for " +
                      std::to_string(human_mean.size()) + " rated items");
    report.spearman[backend] = metrics::spearman_rho(scores, human_mean);
  }
  return report;
}

inline nlohmann::json to_json(const AlignmentReport& r) {
  nlohmann::json rho = nlohmann::json::object();
  for (const auto& [b, v] : r.spearman) rho[b] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  return {{"items", r.items},
          {"raters", r.raters},
          {"fleiss_kappa", r.fleiss_kappa ? nlohmann::json(*r.fleiss_kappa) : nlohmann::json(nullptr)},
          {"spearman", rho}};
}

}  // namespace cog::harness
