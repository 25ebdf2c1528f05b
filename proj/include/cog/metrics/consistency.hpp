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

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "cog/error.hpp"
#include "cog/metrics/backend.hpp"
#include "cog/schema.hpp"

namespace cog::metrics {

/// n x n pairwise similarities; cell (i, j) = s(y_i, y_j). The diagonal is
/// never read.
class ScoreMatrix {
 public:
  explicit ScoreMatrix(std::size_t n) : n_(n), cells_(n * n, 0.0) {}

  std::size_t n() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) { cells_[i * n_ + j] = v; }

  void validate() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        const double v = at(i, j);
        if (!std::isfinite(v) || v < 0.0 || v > 1.0)
          throw DataError("score matrix cell (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside [0,1]: " + std::to_string(v));
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<double> cells_;
};

/// Fills every ordered off-diagonal cell with one scorer call. Symmetric
/// backends score each unordered pair once and mirror it.
inline ScoreMatrix pairwise_scores(const std::vector<std::string>& answers, const SimilarityBackend& backend) {
  const std::size_t n = answers.size();
  if (n < 2) throw UsageError("pairwise scoring needs at least 2 answers");
  if (!backend.scorer) throw UsageError("backend '" + backend.name() + "' has no scorer configured");

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<TextPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = backend.info.symmetric ? i + 1 : 0; j < n; ++j) {
      if (i == j) continue;
      cells.emplace_back(i, j);
      pairs.emplace_back(answers[i], answers[j]);
    }
  }
  const auto scores = backend.scorer->score(pairs);
  if (scores.size() != pairs.size())
    throw DataError("backend '" + backend.name() + "' returned " + std::to_string(scores.size()) +
                    " scores for " + std::to_string(pairs.size()) + " pairs");

  ScoreMatrix m(n);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto [i, j] = cells[k];
    m.set(i, j, scores[k]);
    if (backend.info.symmetric) m.set(j, i, scores[k]);
  }
  m.validate();
  return m;
}

/// Mean similarity over all n(n-1) ordered pairs.
inline double semantic_consistency(const ScoreMatrix& m) {
  const std::size_t n = m.n();
  if (n < 2) throw UsageError("semantic consistency needs at least 2 answers");
  m.validate();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < i; ++j) row += m.at(i, j);
    for (std::size_t j = i + 1; j < n; ++j) row += m.at(i, j);
    total += row;
  }
  return total / static_cast<double>(n * (n - 1));
}

/// Answers to the variants of one question.
struct AnswerGroup {
  std::string id;
  std::vector<std::string> answers;
};

/// Per-question consistency plus the unweighted mean over questions. Groups
/// with fewer than two answers are skipped and counted.
inline ConsistencyReport corpus_consistency(const std::vector<AnswerGroup>& groups, const SimilarityBackend& backend,
                                            const std::string& run_label = {}) {
  ConsistencyReport report;
  report.backend = backend.name();
  report.run_label = run_label;
  report.low_discrimination = backend.info.low_discrimination;
  double sum = 0.0;
  for (const auto& g : groups) {
    if (g.answers.size() < 2) {
      ++report.skipped_groups;
      continue;
    }
    const double score = semantic_consistency(pairwise_scores(g.answers, backend));
    if (!report.per_question.emplace(g.id, score).second)
      throw DataError("duplicate question id in consistency input: " + g.id);
    sum += score;
    report.pair_count += g.answers.size() * (g.answers.size() - 1);
  }
  if (!report.per_question.empty()) report.corpus_mean = sum / static_cast<double>(report.per_question.size());
  return report;
}

}  // namespace cog::metrics
