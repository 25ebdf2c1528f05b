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
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cog/detail/rng.hpp"
#include "cog/error.hpp"
#include "cog/schema.hpp"

namespace cog::corpus {

struct SplitSpec {
  double train_fraction = 0.9;
  std::uint64_t rng_seed = 0;
};

struct Split {
  std::vector<QAPair> train;
  std::vector<QAPair> validation;
};

/// Seeded shuffle, then the first round(fraction * N) pairs train.
inline Split split(const std::vector<QAPair>& pairs, const SplitSpec& spec) {
  if (pairs.size() < 2) throw UsageError("split needs at least 2 pairs");
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
    throw UsageError("train fraction must be in (0, 1)");
  const auto n_train = static_cast<std::size_t>(std::llround(spec.train_fraction * static_cast<double>(pairs.size())));
  if (n_train == 0 || n_train == pairs.size())
    throw UsageError("train fraction " + std::to_string(spec.train_fraction) + " leaves an empty " +
                     (n_train == 0 ? "train" : "validation") + " set for " + std::to_string(pairs.size()) + " pairs");

  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  cog::detail::SeededRng(spec.rng_seed).shuffle(order);

  Split out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    (i < n_train ? out.train : out.validation).push_back(pairs[order[i]]);
  }
  return out;
}

/// Per-source sample counts, in concatenation order.
struct LargeRecipe {
  std::vector<std::pair<std::string, std::size_t>> counts = {
      {"hotpotqa", 900}, {"commonsenseqa", 900}, {"ambigqa", 1200}};
};

struct LargeComposition {
  std::vector<QAPair> train;
  // Unsampled remainder of each source, used for validation.
  std::map<std::string, std::vector<QAPair>> validation_pool;
};

/// small_train followed by a seeded sample of each recipe source. Each
/// source draws from its own RNG stream so adding a source does not change
/// the others' samples.
inline LargeComposition compose_large(const std::vector<QAPair>& small_train,
                                      const std::map<std::string, std::vector<QAPair>>& sources,
                                      const LargeRecipe& recipe, std::uint64_t rng_seed) {
  for (const auto& [name, count] : recipe.counts) {
    const auto it = sources.find(name);
    const std::size_t available = it == sources.end() ? 0 : it->second.size();
    if (count > available)
      throw DataError("source '" + name + "' has " + std::to_string(available) + " pairs, recipe asks for " +
                      std::to_string(count));
  }
  LargeComposition out;
  out.train = small_train;
  for (const auto& [name, count] : recipe.counts) {
    const auto it = sources.find(name);
    if (it == sources.end()) continue;
    auto shuffled = it->second;
    cog::detail::SeededRng(cog::detail::mix_seed(rng_seed, name)).shuffle(shuffled);
    out.train.insert(out.train.end(), shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(count));
    out.validation_pool[name].assign(shuffled.begin() + static_cast<std::ptrdiff_t>(count), shuffled.end());
  }
  return out;
}

}  // namespace cog::corpus
