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

// Shared fixtures for the unit and acceptance suites. No test-framework
// dependency so the acceptance binary can use it too.

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cog/gateway.hpp"
#include "cog/gateway/mock_provider.hpp"
#include "cog/schema.hpp"
#include "cog/templates_text.hpp"

namespace cog::testing {

/// Self-deleting scratch directory.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("cog-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline std::vector<QAPair> make_seeds(std::size_t n, const std::string& source = "truthfulqa") {
  std::vector<QAPair> seeds;
  for (std::size_t i = 0; i < n; ++i) {
    seeds.push_back({source + "-" + std::to_string(i + 1), "What is fact number " + std::to_string(i) + "?",
                     "Fact " + std::to_string(i) + " is true.", source});
  }
  return seeds;
}

enum class PromptKind { kParaphrase, kAnswer, kRank, kDirect };

inline PromptKind classify_prompt(const std::string& prompt) {
  if (prompt.find("Technique Number: ") != std::string::npos) return PromptKind::kParaphrase;
  if (prompt.starts_with("Context: The answer to this question depends")) return PromptKind::kAnswer;
  if (prompt.find(templates::text::kRankInstruction) != std::string::npos) return PromptKind::kRank;
  return PromptKind::kDirect;
}

// Value between the last occurrence of `key` and the next newline.
inline std::string last_field(const std::string& prompt, const std::string& key) {
  const auto at = prompt.rfind(key);
  if (at == std::string::npos) return {};
  const auto start = at + key.size();
  const auto end = prompt.find('\n', start);
  return prompt.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

struct RankObservation {
  std::string question;
  std::vector<std::string> options;  // excludes the escape option
  std::string escape;
};

inline RankObservation parse_rank_prompt(const std::string& prompt) {
  RankObservation obs;
  obs.question = last_field(prompt, "Question: ");
  std::vector<std::string> all;
  for (std::size_t j = 1;; ++j) {
    const std::string key = "\nOption " + std::to_string(j) + ": ";
    const auto at = prompt.find(key);
    if (at == std::string::npos) break;
    const auto start = at + key.size();
    all.push_back(prompt.substr(start, prompt.find('\n', start) - start));
  }
  if (!all.empty()) {
    obs.escape = all.back();
    all.pop_back();
  }
  obs.options = std::move(all);
  return obs;
}

/// Scripted stand-in for the whole CoG conversation.
///
/// Paraphrases are "<question> [t<code>]"; direct answers are pairwise
/// distinct; brief answers are "brief: <context>"; rank prompts are answered
/// according to `rank_mode`. Every rank prompt is recorded for inspection.
class CogScript {
 public:
  enum class RankMode { kPickOriginal, kPickFirst, kDontKnow, kRamble };

  explicit CogScript(std::vector<QAPair> seeds, RankMode mode = RankMode::kPickOriginal)
      : seeds_(std::move(seeds)), mode_(mode) {
    for (const auto& s : seeds_) originals_.insert(s.answer);
  }

  std::shared_ptr<gateway::MockProvider> provider() {
    auto mock = std::make_shared<gateway::MockProvider>();
    mock->set_responder([this](const gateway::CompletionRequest& r) { return respond(r); });
    return mock;
  }

  std::vector<RankObservation> rank_calls() const {
    std::lock_guard lock(mu_);
    return rank_calls_;
  }

  const std::set<std::string>& originals() const { return originals_; }

 private:
  std::optional<gateway::MockReply> respond(const gateway::CompletionRequest& r) {
    using gateway::MockReply;
    switch (classify_prompt(r.prompt)) {
      case PromptKind::kParaphrase:
        return MockReply::ok("Paraphrase: " + last_field(r.prompt, "Sentence: ") + " [t" +
                             last_field(r.prompt, "Technique Number: ") + "]");
      case PromptKind::kDirect:
        return MockReply::ok("Direct reply number " + std::to_string(std::hash<std::string>{}(r.prompt) % 1000003) +
                             " about " + r.prompt);
      case PromptKind::kAnswer:
        return MockReply::ok("Answer: brief " + last_field(r.prompt, "Question: "));
      case PromptKind::kRank: {
        auto obs = parse_rank_prompt(r.prompt);
        std::size_t pick = 0;
        for (std::size_t j = 0; j < obs.options.size(); ++j) {
          if (originals_.contains(obs.options[j])) pick = j + 1;
        }
        const auto k = obs.options.size();
        {
          std::lock_guard lock(mu_);
          rank_calls_.push_back(std::move(obs));
        }
        switch (mode_) {
          case RankMode::kPickOriginal: return MockReply::ok("Option " + std::to_string(pick) + ": chosen");
          case RankMode::kPickFirst: return MockReply::ok("Option 1");
          case RankMode::kDontKnow: return MockReply::ok("Option " + std::to_string(k + 1));
          case RankMode::kRamble: return MockReply::ok("Capsaicinoids are a group of chemicals.");
        }
      }
    }
    return std::nullopt;
  }

  std::vector<QAPair> seeds_;
  RankMode mode_;
  std::set<std::string> originals_;
  mutable std::mutex mu_;
  std::vector<RankObservation> rank_calls_;
};

inline gateway::GatewayOptions fast_options(std::size_t in_flight = 8) {
  gateway::GatewayOptions o;
  o.max_in_flight = in_flight;
  o.sleep = [](std::chrono::milliseconds) {};
  return o;
}

}  // namespace cog::testing
