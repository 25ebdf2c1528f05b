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
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cog/error.hpp"

namespace cog::metrics {

/// Category counts per item: counts[i][c] raters put item i in category c.
/// Every row sums to the rater count.
class RatingTable {
 public:
  RatingTable(std::vector<std::vector<int>> counts, int raters) : counts_(std::move(counts)), raters_(raters) {
    if (counts_.empty()) throw UsageError("rating table needs at least one item");
    if (raters_ < 2) throw UsageError("rating table needs at least two raters");
    const auto categories = counts_.front().size();
    if (categories == 0) throw UsageError("rating table needs at least one category");
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      const auto& row = counts_[i];
      if (row.size() != categories) throw DataError("rating table row " + std::to_string(i) + " has wrong width");
      int sum = 0;
      for (int c : row) {
        if (c < 0) throw DataError("negative rating count in row " + std::to_string(i));
        sum += c;
      }
      if (sum != raters_)
        throw DataError("rating table row " + std::to_string(i) + " sums to " + std::to_string(sum) +
                        ", expected " + std::to_string(raters_));
    }
  }

  /// Builds the table from raw labels: labels[i][r] is rater r's category
  /// (0-based) for item i.
  static RatingTable from_labels(const std::vector<std::vector<int>>& labels, int categories) {
    if (labels.empty()) throw UsageError("no rated items");
    const auto raters = static_cast<int>(labels.front().size());
    std::vector<std::vector<int>> counts;
    for (const auto& item : labels) {
      if (static_cast<int>(item.size()) != raters) throw DataError("items have different rater counts");
      std::vector<int> row(static_cast<std::size_t>(categories), 0);
      for (int label : item) {
        if (label < 0 || label >= categories) throw DataError("label out of range: " + std::to_string(label));
        ++row[static_cast<std::size_t>(label)];
      }
      counts.push_back(std::move(row));
    }
    return RatingTable(std::move(counts), raters);
  }

  std::size_t items() const { return counts_.size(); }
  std::size_t categories() const { return counts_.front().size(); }
  int raters() const { return raters_; }
  const std::vector<std::vector<int>>& counts() const { return counts_; }

 private:
  std::vector<std::vector<int>> counts_;
  int raters_;
};

/// Fleiss' kappa, (P - Pe) / (1 - Pe). Perfect agreement on every item is
/// exactly 1.0, including the case where only one category is ever used.
/// nullopt marks the undefined case Pe = 1 without perfect agreement.
inline std::optional<double> fleiss_kappa(const RatingTable& t) {
  const double n_items = static_cast<double>(t.items());
  const double r = t.raters();
  std::vector<double> column(t.categories(), 0.0);
  double p_bar = 0.0;
  bool perfect = true;
  for (const auto& row : t.counts()) {
    double agree = 0.0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      agree += static_cast<double>(row[c]) * (row[c] - 1);
      column[c] += row[c];
      if (row[c] != 0 && row[c] != t.raters()) perfect = false;
    }
    p_bar += agree / (r * (r - 1));
  }
  if (perfect) return 1.0;
  p_bar /= n_items;
  double p_e = 0.0;
  for (double total : column) {
    const double p = total / (n_items * r);
    p_e += p * p;
  }
  if (p_e >= 1.0) return std::nullopt;
  return (p_bar - p_e) / (1.0 - p_e);
}

/// 1-based ranks; tied values share the average of the ranks they span.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

/// Spearman's rho as the Pearson correlation of average ranks. nullopt when
/// either side has zero rank variance.
inline std::optional<double> spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw UsageError("spearman_rho: length mismatch");
  if (x.size() < 2) throw UsageError("spearman_rho: need at least 2 observations");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;  // average ranks always sum to n(n+1)/2
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

struct ConsistentAccuracy {
  double accuracy = 0.0;
  double consistent_pair_fraction = 0.0;
};

/// accuracy: mean over every label. consistent_pair_fraction: unordered
/// within-group pairs with both answers correct, over all such pairs.
inline ConsistentAccuracy consistent_accuracy(const std::vector<std::vector<bool>>& groups) {
  if (groups.empty()) throw UsageError("consistent_accuracy: no groups");
  std::size_t labels = 0, correct = 0, pairs = 0, both = 0;
  for (const auto& g : groups) {
    if (g.size() < 2) throw UsageError("consistent_accuracy: every group needs at least 2 labels");
    const auto c = static_cast<std::size_t>(std::count(g.begin(), g.end(), true));
    labels += g.size();
    correct += c;
    pairs += g.size() * (g.size() - 1) / 2;
    both += c * (c - 1) / 2;
  }
  return {static_cast<double>(correct) / static_cast<double>(labels),
          static_cast<double>(both) / static_cast<double>(pairs)};
}

}  // namespace cog::metrics
