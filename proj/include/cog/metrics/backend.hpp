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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cog/error.hpp"
#include "cog/metrics/rouge.hpp"

namespace cog::metrics {

using TextPair = std::pair<std::string, std::string>;

/// Scores a batch of ordered (a, b) text pairs, each in [0, 1].
class PairScorer {
 public:
  virtual ~PairScorer() = default;
  virtual std::vector<double> score(const std::vector<TextPair>& pairs) = 0;
};

struct BackendInfo {
  enum class Kind { kBuiltin, kRemote };

  std::string name;
  Kind kind = Kind::kBuiltin;
  bool symmetric = true;
  // Scores cluster near the top of the range and separate poorly.
  bool low_discrimination = false;
};

/// The four known similarity functions.
inline BackendInfo backend_info(std::string_view name) {
  if (name == "rouge-l") return {"rouge-l", BackendInfo::Kind::kBuiltin, true, false};
  if (name == "entailment") return {"entailment", BackendInfo::Kind::kRemote, false, false};
  if (name == "paraphrase") return {"paraphrase", BackendInfo::Kind::kRemote, true, false};
  if (name == "bertscore") return {"bertscore", BackendInfo::Kind::kRemote, true, true};
  throw UsageError("unknown similarity backend: " + std::string(name));
}

class RougeScorer : public PairScorer {
 public:
  std::vector<double> score(const std::vector<TextPair>& pairs) override {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.push_back(rouge_l(a, b));
    return out;
  }
};

/// A named similarity function plus the scorer that evaluates it.
struct SimilarityBackend {
  BackendInfo info;
  std::shared_ptr<PairScorer> scorer;

  const std::string& name() const { return info.name; }
};

inline SimilarityBackend rouge_backend() { return {backend_info("rouge-l"), std::make_shared<RougeScorer>()}; }

}  // namespace cog::metrics
