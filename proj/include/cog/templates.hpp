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

#include <cstddef>
#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "cog/corpus/text.hpp"
#include "cog/error.hpp"
#include "cog/schema.hpp"
#include "cog/templates_text.hpp"

namespace cog::templates {

/// Single-pass placeholder substitution; substituted values are never
/// rescanned, so user text containing "{method}" stays literal.
inline std::string render(std::string_view tpl, const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tpl.size() + 256);
  std::size_t i = 0;
  while (i < tpl.size()) {
    if (tpl[i] == '{') {
      const auto close = tpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        const auto it = values.find(std::string(tpl.substr(i + 1, close - i - 1)));
        if (it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(tpl[i++]);
  }
  return out;
}

inline std::string render_paraphrase_prompt(std::string_view question, ParaphraseTechnique technique) {
  if (corpus::is_blank(question)) throw UsageError("paraphrase prompt needs a non-empty question");
  const int c = code(technique);
  if (c < 1 || c > 4) throw UsageError("invalid paraphrase technique");
  return render(text::kParaphrase, {{"method", std::to_string(c)}, {"sentence", std::string(question)}});
}

inline std::string render_answer_prompt(std::string_view context, std::string_view question) {
  if (corpus::is_blank(context)) throw UsageError("answer prompt needs a non-empty context");
  if (corpus::is_blank(question)) throw UsageError("answer prompt needs a non-empty question");
  return render(text::kAnswer, {{"context", std::string(context)}, {"question", std::string(question)}});
}

/// Multiple-choice option set for the rank prompt. The "don't know" escape
/// is implicit and always rendered as option k+1.
class RankOptions {
 public:
  RankOptions(std::string question, std::vector<std::string> options)
      : question_(std::move(question)), options_(std::move(options)) {
    if (corpus::is_blank(question_)) throw UsageError("rank prompt needs a non-empty question");
    if (options_.empty()) throw UsageError("rank prompt needs at least one candidate answer");
    std::unordered_set<std::string> seen;
    for (const auto& o : options_) {
      if (corpus::is_blank(o)) throw UsageError("rank option is blank");
      if (!seen.insert(corpus::normalize(o)).second)
        throw UsageError("rank options are not distinct after normalization: " + o);
    }
  }

  const std::string& question() const { return question_; }
  const std::vector<std::string>& options() const { return options_; }
  std::size_t k() const { return options_.size(); }
  std::size_t rendered_count() const { return options_.size() + 1; }

 private:
  std::string question_;
  std::vector<std::string> options_;
};

inline std::string render_rank_prompt(const RankOptions& opts) {
  std::string out = render(text::kRankQuestion, {{"question", opts.question()}});
  out += '\n';
  out += text::kRankInstruction;
  out += '\n';
  for (std::size_t j = 0; j < opts.k(); ++j) {
    out += "Option " + std::to_string(j + 1) + ": " + opts.options()[j] + '\n';
  }
  out += "Option " + std::to_string(opts.k() + 1) + ": " + text::kRankEscape + '\n';
  out += text::kRankTail;
  return out;
}

/// Outcome of parsing a rank completion.
struct RankChoice {
  struct Option {
    std::size_t index;  // 1..k
    bool operator==(const Option&) const = default;
  };
  struct DontKnow {
    bool operator==(const DontKnow&) const = default;
  };
  struct ParseFailure {
    std::string raw;
    bool operator==(const ParseFailure&) const = default;
  };

  std::variant<Option, DontKnow, ParseFailure> value;

  bool is_option() const { return std::holds_alternative<Option>(value); }
  bool is_dont_know() const { return std::holds_alternative<DontKnow>(value); }
  bool is_parse_failure() const { return std::holds_alternative<ParseFailure>(value); }
  std::size_t option_index() const { return std::get<Option>(value).index; }

  bool operator==(const RankChoice&) const = default;
};

namespace detail {

inline RankChoice classify(std::string_view digits, std::size_t k, const std::string& raw) {
  // More digits than any sane option count: out of range.
  if (digits.size() > 6) return {RankChoice::ParseFailure{raw}};
  std::size_t j = 0;
  for (char c : digits) j = j * 10 + static_cast<std::size_t>(c - '0');
  if (j >= 1 && j <= k) return {RankChoice::Option{j}};
  if (j == k + 1) return {RankChoice::DontKnow{}};
  return {RankChoice::ParseFailure{raw}};
}

}  // namespace detail

/// Reads the model's pick out of a rank completion. The first "Option <j>"
/// (any case, braces tolerated) wins; failing that, a response opening with
/// the escape text is dont_know, and a bare leading integer is accepted.
/// Anything else, including out-of-range indices, is a parse failure.
inline RankChoice parse_rank_response(const std::string& raw, std::size_t k) {
  if (k == 0) throw UsageError("parse_rank_response requires k >= 1");
  static const std::regex option_re(R"(option\s*\{?\s*(\d+))", std::regex::icase);
  static const std::regex leading_int_re(R"(^\s*(\d+)\b)");

  std::smatch m;
  if (std::regex_search(raw, m, option_re)) return detail::classify(m.str(1), k, raw);
  if (corpus::normalize(raw).starts_with(corpus::normalize(text::kRankEscape))) return {RankChoice::DontKnow{}};
  if (std::regex_search(raw, m, leading_int_re)) return detail::classify(m.str(1), k, raw);
  return {RankChoice::ParseFailure{raw}};
}

/// Removes a leading "<label>:" (any case) and surrounding whitespace.
inline std::string strip_label(std::string_view completion, std::string_view label) {
  auto t = corpus::trim(completion);
  if (t.size() >= label.size() + 1) {
    bool match = true;
    for (std::size_t i = 0; i < label.size(); ++i) {
      char a = t[i];
      char b = label[i];
      if (a >= 'A' && a <= 'Z') a = static_cast<char>(a - 'A' + 'a');
      if (b >= 'A' && b <= 'Z') b = static_cast<char>(b - 'A' + 'a');
      if (a != b) {
        match = false;
        break;
      }
    }
    if (match && t[label.size()] == ':') t = corpus::trim(t.substr(label.size() + 1));
  }
  return std::string(t);
}

}  // namespace cog::templates
