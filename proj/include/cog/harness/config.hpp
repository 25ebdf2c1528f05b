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
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cog/corpus/text.hpp"
#include "cog/error.hpp"

namespace cog::harness {

/// Layered key-value settings: file < environment < explicit overrides.
///
/// File syntax is one `key = value` per line; '#' starts a comment. The
/// environment override for key `a.b_c` is COG_A_B_C.
class Config {
 public:
  static inline const std::vector<std::string> kKnownKeys = {
      "provider.endpoint", "provider.timeout_s",  "model.paraphrase",     "model.answer",
      "model.rank",        "parallelism",         "scorer.endpoint",      "scorer.batch_cap",
      "retry.max_attempts", "retry.base_delay_ms", "cog.dont_know_policy", "cog.max_tokens",
  };

  static std::string env_name(const std::string& key) {
    std::string name = "COG_";
    for (char c : key) {
      if (c == '.') c = '_';
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      name.push_back(c);
    }
    return name;
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (corpus::is_blank(line)) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw UsageError(path + ":" + std::to_string(number) + ": expected key = value");
      const auto key = std::string(corpus::trim(std::string_view(line).substr(0, eq)));
      check_key(key);
      values_[key] = std::string(corpus::trim(std::string_view(line).substr(eq + 1)));
    }
  }

  void apply_env() {
    for (const auto& key : kKnownKeys) {
      if (const char* v = std::getenv(env_name(key).c_str())) values_[key] = v;
    }
  }

  void set(const std::string& key, const std::string& value) {
    check_key(key);
    values_[key] = value;
  }

  std::optional<std::string> get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get_or(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
  }

  long long get_int(const std::string& key, long long fallback) const {
    const auto v = get(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      const auto n = std::stoll(*v, &used);
      if (used != v->size()) throw std::invalid_argument("trailing characters");
      return n;
    } catch (const std::exception&) {
      throw UsageError("config key '" + key + "' is not an integer: " + *v);
    }
  }

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  static void check_key(const std::string& key) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
      throw UsageError("unknown config key: " + key);
  }

  std::map<std::string, std::string> values_;
};

}  // namespace cog::harness
