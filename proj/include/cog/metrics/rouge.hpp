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
#include <string>
#include <string_view>
#include <vector>

#include "cog/corpus/text.hpp"

namespace cog::metrics {

/// Lowercased whitespace tokens.
inline std::vector<std::string> rouge_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (corpus::is_space(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    current.push_back(c);
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

inline std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      row[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], row[j - 1]);
    }
    std::swap(prev, row);
  }
  return prev[b.size()];
}

/// Token-level Rouge-L F1 (beta = 1), no stemming. Symmetric in its
/// arguments; 0 when either side is empty or nothing is shared.
inline double rouge_l(std::string_view a, std::string_view b) {
  const auto ta = rouge_tokens(a);
  const auto tb = rouge_tokens(b);
  const auto lcs = lcs_length(ta, tb);
  if (lcs == 0) return 0.0;
  // 2PR / (P + R) with P = L/|b|, R = L/|a| reduces to 2L / (|a| + |b|);
  // one integer division keeps the result correctly rounded.
  return static_cast<double>(2 * lcs) / static_cast<double>(ta.size() + tb.size());
}

}  // namespace cog::metrics
