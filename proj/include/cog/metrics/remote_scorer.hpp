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
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "cog/detail/url.hpp"
#include "cog/error.hpp"
#include "cog/metrics/backend.hpp"

namespace cog::metrics {

/// Client for the scoring service:
///   POST <endpoint>/v1/score  {"metric", "pairs": [[a, b], ...]}
///     -> {"metric", "scores": [...], "model_id"}
///   GET  <endpoint>/v1/health -> {"status", "loaded_metrics", "model_ids"}
class RemoteScorer : public PairScorer {
 public:
  RemoteScorer(std::string endpoint, std::string metric, std::size_t batch_cap = 256,
               std::chrono::seconds timeout = std::chrono::seconds(120))
      : url_(detail::parse_url(endpoint)), metric_(std::move(metric)), batch_cap_(batch_cap), timeout_(timeout) {
    if (batch_cap_ == 0) throw UsageError("scorer batch cap must be >= 1");
  }

  /// One request per batch_cap pairs; a matrix of n <= 16 answers always fits
  /// in a single call at the default cap.
  std::vector<double> score(const std::vector<TextPair>& pairs) override {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (std::size_t start = 0; start < pairs.size(); start += batch_cap_) {
      const auto end = std::min(pairs.size(), start + batch_cap_);
      auto chunk = score_chunk(pairs, start, end);
      out.insert(out.end(), chunk.begin(), chunk.end());
    }
    return out;
  }

  nlohmann::json health() const {
    auto client = make_client();
    auto res = client.Get(detail::join_path(url_.path, "/v1/health"));
    if (!res) throw ProviderError(ProviderError::Kind::kUnreachable, "scorer service unreachable: " + httplib::to_string(res.error()));
    if (res->status != 200) throw DataError("scorer health returned HTTP " + std::to_string(res->status));
    try {
      return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed scorer health response: ") + e.what());
    }
  }

  const std::string& last_model_id() const { return model_id_; }

 private:
  httplib::Client make_client() const {
    httplib::Client client(url_.origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    return client;
  }

  std::vector<double> score_chunk(const std::vector<TextPair>& pairs, std::size_t start, std::size_t end) {
    nlohmann::json body = {{"metric", metric_}, {"pairs", nlohmann::json::array()}};
    for (std::size_t i = start; i < end; ++i) body["pairs"].push_back({pairs[i].first, pairs[i].second});

    auto client = make_client();
    auto res = client.Post(detail::join_path(url_.path, "/v1/score"), body.dump(), "application/json");
    if (!res) {
      throw ProviderError(ProviderError::Kind::kUnreachable,
                          "scorer service unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status >= 500) {
      throw ProviderError(ProviderError::Kind::kUnreachable,
                          "scorer service returned HTTP " + std::to_string(res->status));
    }
    if (res->status != 200) {
      throw ProviderError(ProviderError::Kind::kRejected, "scorer service rejected request with HTTP " +
                                                              std::to_string(res->status) + ": " + res->body.substr(0, 200));
    }
    std::vector<double> scores;
    try {
      const auto reply = nlohmann::json::parse(res->body);
      if (reply.at("metric").get<std::string>() != metric_) throw DataError("scorer echoed a different metric");
      scores = reply.at("scores").get<std::vector<double>>();
      model_id_ = reply.at("model_id").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed scorer response: ") + e.what());
    }
    if (scores.size() != end - start)
      throw DataError("malformed scorer response: " + std::to_string(scores.size()) + " scores for " +
                      std::to_string(end - start) + " pairs");
    for (double s : scores) {
      if (!std::isfinite(s) || s < 0.0 || s > 1.0)
        throw DataError("malformed scorer response: score outside [0,1]");
    }
    return scores;
  }

  detail::Url url_;
  std::string metric_;
  std::size_t batch_cap_;
  std::chrono::seconds timeout_;
  std::string model_id_;
};

inline SimilarityBackend remote_backend(const std::string& name, const std::string& endpoint,
                                        std::size_t batch_cap = 256) {
  auto info = backend_info(name);
  if (info.kind != BackendInfo::Kind::kRemote) throw UsageError("backend '" + name + "' is not a remote backend");
  if (endpoint.empty()) throw UsageError("backend '" + name + "' needs a scorer service endpoint");
  return {info, std::make_shared<RemoteScorer>(endpoint, name, batch_cap)};
}

}  // namespace cog::metrics
