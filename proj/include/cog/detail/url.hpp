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

#include <string>
#include <string_view>

#include "cog/error.hpp"

namespace cog::detail {

struct Url {
  std::string origin;  // scheme://host[:port], what httplib::Client takes
  std::string path;    // always starts with '/'
};

inline Url parse_url(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) throw UsageError("endpoint URL needs a scheme: " + std::string(url));
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw UsageError("unsupported URL scheme: " + std::string(scheme));
  const auto rest = url.substr(scheme_end + 3);
  const auto slash = rest.find('/');
  const auto authority = rest.substr(0, slash);
  if (authority.empty()) throw UsageError("endpoint URL has no host: " + std::string(url));
  Url out;
  out.origin = std::string(scheme) + "://" + std::string(authority);
  out.path = slash == std::string_view::npos ? "/" : std::string(rest.substr(slash));
  return out;
}

// Joins a base path and a suffix with exactly one '/'.
inline std::string join_path(std::string base, std::string_view suffix) {
  while (!base.empty() && base.back() == '/') base.pop_back();
  if (!suffix.starts_with('/')) base.push_back('/');
  base += suffix;
  return base;
}

}  // namespace cog::detail
