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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cog/corpus/text.hpp"
#include "cog/detail/parallel.hpp"
#include "cog/detail/rng.hpp"
#include "cog/error.hpp"
#include "cog/gateway.hpp"
#include "cog/schema.hpp"
#include "cog/templates.hpp"

namespace cog::pipeline {

enum class DontKnowPolicy { kFallbackToOriginal, kDropVariant };

inline std::string to_string(DontKnowPolicy p) {
  return p == DontKnowPolicy::kFallbackToOriginal ? "fallback-to-original" : "drop-variant";
}

inline DontKnowPolicy parse_dont_know_policy(std::string_view s) {
  if (s == "fallback-to-original") return DontKnowPolicy::kFallbackToOriginal;
  if (s == "drop-variant") return DontKnowPolicy::kDropVariant;
  throw UsageError("unknown dont_know_policy: " + std::string(s));
}

struct CogConfig {
  int n_paraphrases = 4;
  // Empty means the first n_paraphrases techniques in prompt order.
  std::vector<ParaphraseTechnique> techniques;
  bool shorten_answers = true;
  std::string paraphrase_model = "gpt-4-0613";
  std::string answer_model = "gpt-4-0613";
  std::string rank_model = "gpt-4-0613";
  DontKnowPolicy dont_know_policy = DontKnowPolicy::kFallbackToOriginal;
  double temperature = 0.0;
  int max_tokens = 256;
  std::uint64_t rng_seed = 0;
  std::size_t parallelism = 4;

  std::vector<ParaphraseTechnique> resolved_techniques() const {
    if (!techniques.empty()) return techniques;
    return {kAllTechniques.begin(), kAllTechniques.begin() + std::clamp(n_paraphrases, 0, 4)};
  }

  void validate() const {
    if (n_paraphrases < 1 || n_paraphrases > 4) throw UsageError("n_paraphrases must be in 1..4");
    const auto t = resolved_techniques();
    if (static_cast<int>(t.size()) != n_paraphrases)
      throw UsageError("technique list length must equal n_paraphrases");
    std::set<int> seen;
    for (auto x : t) {
      if (!seen.insert(code(x)).second) throw UsageError("paraphrase techniques must be distinct");
    }
    if (parallelism == 0) throw UsageError("parallelism must be >= 1");
  }
};

struct PipelineWarning {
  std::string seed_id;
  std::string stage;
  std::string message;

  bool operator==(const PipelineWarning&) const = default;
};

struct GeneratedParaphrase {
  ParaphraseTechnique technique;
  std::string question;

  bool operator==(const GeneratedParaphrase&) const = default;
};

struct ParaphraseBatch {
  std::vector<GeneratedParaphrase> paraphrases;
  std::vector<PipelineWarning> warnings;
};

struct RankOutcome {
  std::string final_answer;
  Selection selection;
  bool dropped = false;  // dont_know under the drop-variant policy
  std::vector<std::string> presented;  // candidates in prompt order
};

struct CogRun {
  std::vector<ExpandedSet> sets;
  std::vector<PipelineWarning> warnings;
};

/// Union of the brief answers and y0, deduplicated under normalization with
/// y0 first. Absent answers are skipped.
inline std::vector<std::string> build_candidates(const std::string& original_answer,
                                                 const std::vector<std::optional<std::string>>& briefs) {
  std::vector<std::string> all{original_answer};
  for (const auto& b : briefs) {
    if (b && !corpus::is_blank(*b)) all.push_back(*b);
  }
  return corpus::dedup(all);
}

/// Drives the three CoG stages against a gateway.
class Pipeline {
 public:
  Pipeline(gateway::Gateway& llm, CogConfig cfg) : llm_(llm), cfg_(std::move(cfg)) { cfg_.validate(); }

  const CogConfig& config() const { return cfg_; }

  gateway::CompletionRequest paraphrase_request(const std::string& question, ParaphraseTechnique t) const {
    return {templates::render_paraphrase_prompt(question, t), cfg_.paraphrase_model, cfg_.temperature,
            cfg_.max_tokens, {"\n"}};
  }

  gateway::CompletionRequest direct_request(const std::string& question) const {
    return {question, cfg_.answer_model, cfg_.temperature, cfg_.max_tokens, {}};
  }

  /// Stage 1: one paraphrase per configured technique, deduplicated against
  /// the original and each other. A duplicate is regenerated once and then
  /// dropped.
  ParaphraseBatch generate_paraphrases(const QAPair& seed) {
    const auto techniques = cfg_.resolved_techniques();
    std::vector<gateway::CompletionRequest> requests;
    for (auto t : techniques) requests.push_back(paraphrase_request(seed.question, t));
    const auto outcomes = llm_.complete_batch(requests, cfg_.parallelism);

    ParaphraseBatch out;
    std::set<std::string> taken{corpus::normalize(seed.question)};
    auto accept = [&](const gateway::CompletionOutcome& o) -> std::optional<std::string> {
      if (!o.ok()) return std::nullopt;
      auto text = templates::strip_label(o.result->text, "Paraphrase");
      if (text.empty() || taken.contains(corpus::normalize(text))) return std::nullopt;
      return text;
    };
    for (std::size_t i = 0; i < techniques.size(); ++i) {
      const auto tech_label = std::string(label(techniques[i]));
      if (!outcomes[i].ok()) {
        out.warnings.push_back({seed.id, "paraphrase", tech_label + ": " + outcomes[i].error});
        continue;
      }
      auto text = accept(outcomes[i]);
      if (!text) {
        text = accept(llm_.complete_outcome(requests[i]));
        if (!text) {
          out.warnings.push_back({seed.id, "paraphrase", tech_label + ": duplicate after one regeneration, dropped"});
          continue;
        }
      }
      taken.insert(corpus::normalize(*text));
      out.paraphrases.push_back({techniques[i], std::move(*text)});
    }
    if (out.paraphrases.empty()) {
      out.warnings.push_back({seed.id, "paraphrase", "no paraphrase survived"});
    }
    return out;
  }

  /// Stage 2a: direct answers, the bare question as the whole prompt.
  std::vector<std::optional<std::string>> generate_preliminary_answers(const std::vector<std::string>& questions,
                                                                       std::vector<PipelineWarning>* warnings = nullptr,
                                                                       const std::string& seed_id = {}) {
    if (questions.empty()) throw UsageError("no questions to answer");
    std::vector<gateway::CompletionRequest> requests;
    for (const auto& q : questions) requests.push_back(direct_request(q));
    std::vector<std::optional<std::string>> answers;
    for (const auto& o : llm_.complete_batch(requests, cfg_.parallelism)) {
      if (o.ok() && !corpus::is_blank(o.result->text)) {
        answers.emplace_back(std::string(corpus::trim(o.result->text)));
      } else {
        answers.emplace_back(std::nullopt);
        if (warnings) warnings->push_back({seed_id, "preliminary", o.ok() ? "empty completion" : o.error});
      }
    }
    return answers;
  }

  /// Stage 2b: shortens each preliminary answer with the answer prompt. With
  /// shortening disabled the preliminary answers pass through unchanged.
  std::vector<std::optional<std::string>> shorten_answers(const std::vector<std::string>& questions,
                                                          const std::vector<std::optional<std::string>>& preliminary,
                                                          std::vector<PipelineWarning>* warnings = nullptr,
                                                          const std::string& seed_id = {}) {
    if (questions.size() != preliminary.size()) throw UsageError("questions and answers are not aligned");
    if (!cfg_.shorten_answers) return preliminary;

    std::vector<std::size_t> positions;
    std::vector<gateway::CompletionRequest> requests;
    for (std::size_t i = 0; i < questions.size(); ++i) {
      if (!preliminary[i]) continue;
      positions.push_back(i);
      requests.push_back({templates::render_answer_prompt(*preliminary[i], questions[i]), cfg_.answer_model,
                          cfg_.temperature, cfg_.max_tokens, {"\n"}});
    }
    std::vector<std::optional<std::string>> brief(questions.size());
    const auto outcomes = llm_.complete_batch(requests, cfg_.parallelism);
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
      if (!outcomes[r].ok()) {
        if (warnings) warnings->push_back({seed_id, "shorten", outcomes[r].error});
        continue;
      }
      auto text = templates::strip_label(outcomes[r].result->text, "Answer");
      if (!text.empty()) brief[positions[r]] = std::move(text);
    }
    return brief;
  }

  /// A rank call with its candidates already placed.
  struct PreparedRank {
    std::vector<std::string> candidates;
    gateway::CompletionRequest request;
  };

  /// Places y0 at a seeded random slot among the candidates and renders the
  /// rank prompt. `salt` separates the RNG streams of different calls.
  PreparedRank prepare_rank(const QAPair& seed, const std::string& question, std::vector<std::string> candidates,
                            const std::string& salt) const {
    const auto y0 = std::find(candidates.begin(), candidates.end(), seed.answer);
    if (y0 == candidates.end()) throw UsageError("rank candidates must include the original answer");
    candidates.erase(y0);
    detail::SeededRng rng(detail::mix_seed(cfg_.rng_seed, seed.id + '\x1f' + salt));
    const auto slot = static_cast<std::ptrdiff_t>(rng.below(candidates.size() + 1));
    candidates.insert(candidates.begin() + slot, seed.answer);
    templates::RankOptions opts(question, candidates);  // checks distinctness
    return {candidates,
            {templates::render_rank_prompt(opts), cfg_.rank_model, cfg_.temperature, cfg_.max_tokens, {}}};
  }

  RankOutcome resolve_rank(const QAPair& seed, const PreparedRank& call, const gateway::CompletionOutcome& reply) const {
    RankOutcome out;
    out.presented = call.candidates;
    if (!reply.ok()) {
      out.final_answer = seed.answer;
      out.selection = Selection::parse_failure_fallback();
      return out;
    }
    const auto choice = templates::parse_rank_response(reply.result->text, call.candidates.size());
    if (choice.is_option()) {
      const auto j = choice.option_index();
      out.final_answer = call.candidates[j - 1];
      out.selection = Selection::ranked(static_cast<int>(j));
    } else if (choice.is_dont_know()) {
      out.final_answer = seed.answer;
      out.selection = Selection::dont_know_fallback();
      out.dropped = cfg_.dont_know_policy == DontKnowPolicy::kDropVariant;
    } else {
      out.final_answer = seed.answer;
      out.selection = Selection::parse_failure_fallback();
    }
    return out;
  }

  /// Stage 3 for one paraphrased question.
  RankOutcome rank_and_select(const QAPair& seed, const std::string& question, std::vector<std::string> candidates) {
    const auto call = prepare_rank(seed, question, std::move(candidates), question);
    return resolve_rank(seed, call, llm_.complete_outcome(call.request));
  }

  /// Full pipeline for one seed.
  ExpandedSet expand(const QAPair& seed, std::vector<PipelineWarning>& warnings) {
    ExpandedSet set;
    set.seed = seed;
    set.variants.push_back({seed.id, 0, std::nullopt, seed.question, std::nullopt, std::nullopt, seed.answer,
                            Selection::original_kept()});

    auto para = generate_paraphrases(seed);
    warnings.insert(warnings.end(), para.warnings.begin(), para.warnings.end());
    if (para.paraphrases.empty()) return set;

    std::vector<std::string> questions;
    for (const auto& p : para.paraphrases) questions.push_back(p.question);
    const auto preliminary = generate_preliminary_answers(questions, &warnings, seed.id);
    const auto brief = shorten_answers(questions, preliminary, &warnings, seed.id);
    const auto candidates = build_candidates(seed.answer, brief);

    std::vector<PreparedRank> calls;
    std::vector<gateway::CompletionRequest> requests;
    for (std::size_t i = 0; i < questions.size(); ++i) {
      calls.push_back(prepare_rank(seed, questions[i], candidates, std::to_string(i) + '\x1f' + questions[i]));
      requests.push_back(calls.back().request);
    }
    const auto replies = llm_.complete_batch(requests, cfg_.parallelism);
    for (std::size_t i = 0; i < questions.size(); ++i) {
      auto ranked = resolve_rank(seed, calls[i], replies[i]);
      if (ranked.dropped) {
        warnings.push_back({seed.id, "rank", "dont-know selected, variant dropped"});
        continue;
      }
      if (!replies[i].ok()) warnings.push_back({seed.id, "rank", replies[i].error});
      VariantRecord v;
      v.seed_id = seed.id;
      v.variant_index = static_cast<int>(set.variants.size());
      v.technique = para.paraphrases[i].technique;
      v.question = questions[i];
      v.preliminary_answer = preliminary[i];
      v.brief_answer = brief[i];
      v.final_answer = std::move(ranked.final_answer);
      v.selection = ranked.selection;
      set.variants.push_back(std::move(v));
    }
    set.n_paraphrases = static_cast<int>(set.variants.size()) - 1;
    return set;
  }

  /// Expands every seed. Seeds run concurrently (cfg.parallelism workers);
  /// output order follows input order.
  CogRun run_cog(const std::vector<QAPair>& seeds) {
    CogRun run;
    run.sets.resize(seeds.size());
    std::vector<std::vector<PipelineWarning>> warnings(seeds.size());
    detail::parallel_for(seeds.size(), cfg_.parallelism,
                         [&](std::size_t i) { run.sets[i] = expand(seeds[i], warnings[i]); });
    for (auto& w : warnings) run.warnings.insert(run.warnings.end(), w.begin(), w.end());
    return run;
  }

 private:
  gateway::Gateway& llm_;
  CogConfig cfg_;
};

}  // namespace cog::pipeline
