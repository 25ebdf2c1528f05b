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
#include <cstdlib>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "cog/detail/url.hpp"
#include "cog/gateway.hpp"

namespace cog::gateway {

inline constexpr const char* kApiKeyEnv = "COG_API_KEY";

/// Chat-completion provider speaking the OpenAI-compatible wire format:
/// one user message carrying the rendered prompt.
class HttpChatProvider : public Provider {
 public:
  HttpChatProvider(std::string endpoint, std::string api_key,
                   std::chrono::seconds timeout = std::chrono::seconds(60))
      : url_(detail::parse_url(endpoint)), api_key_(std::move(api_key)), timeout_(timeout) {}

  /// Credential comes from COG_API_KEY. A missing key is reported on the
  /// first call, not here, so offline subcommands still work.
  static std::shared_ptr<HttpChatProvider> from_env(const std::string& endpoint,
                                                    std::chrono::seconds timeout = std::chrono::seconds(60)) {
    const char* key = std::getenv(kApiKeyEnv);
    return std::make_shared<HttpChatProvider>(endpoint, key ? key : "", timeout);
  }

  static nlohmann::json request_body(const CompletionRequest& request) {
    nlohmann::json body = {
        {"model", request.model},
        {"messages", nlohmann::json::array({{{"role", "user"}, {"content", request.prompt}}})},
        {"temperature", request.temperature},
        {"max_tokens", request.max_tokens},
    };
    if (!request.stop_sequences.empty()) body["stop"] = request.stop_sequences;
    return body;
  }

  std::string complete(const CompletionRequest& request) override {
    if (api_key_.empty()) {
      throw TransportError(TransportError::Kind::kCredentialMissing,
                           std::string(kApiKeyEnv) + " is not set");
    }
    httplib::Client client(url_.origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    httplib::Headers headers = {{"Authorization", "Bearer " + api_key_}};

    auto res = client.Post(url_.path, headers, request_body(request).dump(), "application/json");
    if (!res) {
      const auto err = res.error();
      const auto kind = (err == httplib::Error::Read || err == httplib::Error::Write ||
                         err == httplib::Error::ConnectionTimeout)
                            ? TransportError::Kind::kTimeout
                            : TransportError::Kind::kConnection;
      throw TransportError(kind, "request to " + url_.origin + " failed: " + httplib::to_string(err));
    }
    if (res->status >= 500 || res->status == 408) {
      throw TransportError(TransportError::Kind::kServer, "provider returned HTTP " + std::to_string(res->status));
    }
    if (res->status >= 400) {
      throw TransportError(TransportError::Kind::kRejected,
                           "provider rejected request with HTTP " + std::to_string(res->status) + ": " +
                               res->body.substr(0, 200));
    }
    try {
      const auto reply = nlohmann::json::parse(res->body);
      return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw TransportError(TransportError::Kind::kRejected,
                           std::string("unexpected provider response: ") + e.what());
    }
  }

 private:
  detail::Url url_;
  std::string api_key_;
  std::chrono::seconds timeout_;
};

}  // namespace cog::gateway
