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

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cog/error.hpp"
#include "cog/schema.hpp"

namespace cog::harness {

/// Creates <root>/<label>-<UTC timestamp>, adding -1, -2, ... if that name
/// is taken. Existing run directories are never reused.
inline std::filesystem::path make_run_dir(const std::filesystem::path& root, const std::string& label) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream stamp;
  stamp << std::put_time(&tm, "%Y%m%dT%H%M%SZ");
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec) throw DataError("cannot create output directory " + root.string() + ": " + ec.message());
  const auto base = label + "-" + stamp.str();
  for (int k = 0;; ++k) {
    auto dir = root / (k == 0 ? base : base + "-" + std::to_string(k));
    if (std::filesystem::create_directory(dir, ec)) return dir;
    if (ec) throw DataError("cannot create run directory " + dir.string() + ": " + ec.message());
  }
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << value.dump(2) << '\n';
}

inline nlohmann::json reports_json(const std::map<std::string, ConsistencyReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [name, r] : reports) out.push_back(r);
  return out;
}

inline std::map<std::string, ConsistencyReport> read_reports(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open report file " + path.string());
  std::map<std::string, ConsistencyReport> out;
  try {
    const auto j = nlohmann::json::parse(in);
    for (const auto& item : j) {
      auto r = item.get<ConsistencyReport>();
      out[r.backend] = std::move(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed report file " + path.string() + ": " + e.what());
  }
  return out;
}

namespace detail {

inline std::string display_name(const std::string& backend) {
  if (backend == "rouge-l") return "Rouge-L";
  if (backend == "entailment") return "Entailment";
  if (backend == "paraphrase") return "Paraphrase";
  if (backend == "bertscore") return "BERTScore";
  return backend;
}

inline std::string percent_cell(const std::optional<ConsistencyReport>& r) {
  if (!r) return "-";
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << r->corpus_mean * 100.0;
  return s.str();
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace detail

/// Plain-text table in the Before/After-per-backend layout; values are
/// percentages with one decimal. A missing side prints "-".
inline std::string render_table(const std::string& model, const std::map<std::string, ConsistencyReport>& before,
                                const std::map<std::string, ConsistencyReport>& after) {
  std::vector<std::string> backends;
  for (const auto& [b, _] : before) backends.push_back(b);
  for (const auto& [b, _] : after) {
    if (!before.contains(b)) backends.push_back(b);
  }
  const std::size_t first = std::max<std::size_t>(model.size(), 5) + 2;
  constexpr std::size_t cell = 8;
  std::string head1 = detail::pad("Model", first), head2 = std::string(first, ' '), row = detail::pad(model, first);
  for (const auto& b : backends) {
    auto name = detail::display_name(b);
    if (after.contains(b) ? after.at(b).low_discrimination : before.at(b).low_discrimination) name += "*";
    head1 += detail::pad(name, 2 * cell);
    head2 += detail::pad("Before", cell) + detail::pad("After", cell);
    auto pick = [&](const auto& m) {
      const auto it = m.find(b);
      return it == m.end() ? std::nullopt : std::optional<ConsistencyReport>(it->second);
    };
    row += detail::pad(detail::percent_cell(pick(before)), cell) + detail::pad(detail::percent_cell(pick(after)), cell);
  }
  auto rstrip = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::string out = rstrip(head1) + "\n" + rstrip(head2) + "\n" + std::string(rstrip(row).size(), '-') + "\n" +
                    rstrip(row) + "\n";
  bool flagged = false;
  for (const auto& b : backends) flagged |= b == "bertscore";
  if (flagged) out += "* low-discrimination metric: values cluster near the top of the range\n";
  return out;
}

}  // namespace cog::harness
