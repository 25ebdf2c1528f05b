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
#include <chrono>
#include <cstddef>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cog/error.hpp"
#include "cog/gateway.hpp"

namespace cog::gateway {

/// A scripted reply: completion text, or a forced transport failure.
struct MockReply {
  std::string text;
  std::optional<TransportError::Kind> failure;

  static MockReply ok(std::string t) { return {std::move(t), std::nullopt}; }
  static MockReply fail(TransportError::Kind k) { return {{}, k}; }
};

/// Deterministic offline provider.
///
/// Lookup order for each prompt: exact-prompt script, substring rules,
/// the ordered sequence, then the responder callback. Anything left over is
/// an "unscripted" failure. Exact and rule entries hold a reply list that is
/// consumed front to back; the last reply repeats once the list runs out.
class MockProvider : public Provider {
 public:
  using Responder = std::function<std::optional<MockReply>(const CompletionRequest&)>;

  void script(const std::string& prompt, std::vector<MockReply> replies) {
    std::lock_guard lock(mu_);
    exact_[prompt] = Cursor{std::move(replies), 0};
  }

  void script(const std::string& prompt, const std::string& reply) {
    script(prompt, std::vector<MockReply>{MockReply::ok(reply)});
  }

  void add_rule(const std::string& needle, std::vector<MockReply> replies) {
    std::lock_guard lock(mu_);
    rules_.push_back({needle, Cursor{std::move(replies), 0}});
  }

  void push_sequence(MockReply reply) {
    std::lock_guard lock(mu_);
    sequence_.push_back(std::move(reply));
  }

  void set_responder(Responder responder) {
    std::lock_guard lock(mu_);
    responder_ = std::move(responder);
  }

  // Per-call delay; lets tests observe overlapping calls.
  void set_latency(std::chrono::milliseconds latency) { latency_ = latency; }

  std::string complete(const CompletionRequest& request) override {
    {
      std::lock_guard lock(mu_);
      ++in_flight_;
      max_in_flight_ = std::max(max_in_flight_, in_flight_);
      prompts_.push_back(request.prompt);
    }
    struct Leave {
      MockProvider& self;
      ~Leave() {
        std::lock_guard lock(self.mu_);
        --self.in_flight_;
      }
    } leave{*this};

    if (latency_.count() > 0) std::this_thread::sleep_for(latency_);

    const MockReply reply = lookup(request);
    if (reply.failure) throw TransportError(*reply.failure, "mock: scripted failure");
    return reply.text;
  }

  std::size_t call_count() const {
    std::lock_guard lock(mu_);
    return prompts_.size();
  }

  std::size_t max_in_flight() const {
    std::lock_guard lock(mu_);
    return max_in_flight_;
  }

  std::vector<std::string> prompts() const {
    std::lock_guard lock(mu_);
    return prompts_;
  }

  /// Builds a provider from the --mock-script JSON layout:
  ///   {"prompts": {"<exact prompt>": <reply or [replies]>},
  ///    "rules": [{"contains": "...", "reply": <reply or [replies]>}],
  ///    "sequence": [<reply>, ...]}
  /// A reply is a string, {"text": "..."} or {"error": "timeout|server|connection|rejected"}.
  static std::shared_ptr<MockProvider> from_json(const nlohmann::json& script) {
    auto mock = std::make_shared<MockProvider>();
    try {
      if (auto it = script.find("prompts"); it != script.end()) {
        for (const auto& [prompt, value] : it->items()) mock->script(prompt, replies_from(value));
      }
      if (auto it = script.find("rules"); it != script.end()) {
        for (const auto& rule : *it) {
          mock->add_rule(rule.at("contains").get<std::string>(), replies_from(rule.at("reply")));
        }
      }
      if (auto it = script.find("sequence"); it != script.end()) {
        for (const auto& value : *it) mock->push_sequence(reply_from(value));
      }
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("malformed mock script: ") + e.what());
    }
    return mock;
  }

  static std::shared_ptr<MockProvider> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open mock script " + path);
    nlohmann::json script;
    try {
      in >> script;
    } catch (const nlohmann::json::exception& e) {
      throw DataError("mock script " + path + ": " + e.what());
    }
    return from_json(script);
  }

 private:
  struct Cursor {
    std::vector<MockReply> replies;
    std::size_t next = 0;

    MockReply take() {
      if (replies.empty()) return MockReply::fail(TransportError::Kind::kUnscripted);
      const std::size_t i = std::min(next, replies.size() - 1);
      ++next;
      return replies[i];
    }
  };

  MockReply lookup(const CompletionRequest& request) {
    Responder responder;
    {
      std::lock_guard lock(mu_);
      if (auto it = exact_.find(request.prompt); it != exact_.end()) return it->second.take();
      for (auto& [needle, cursor] : rules_) {
        if (request.prompt.find(needle) != std::string::npos) return cursor.take();
      }
      if (!sequence_.empty()) {
        MockReply r = std::move(sequence_.front());
        sequence_.pop_front();
        return r;
      }
      responder = responder_;
    }
    if (responder) {
      if (auto r = responder(request)) return *r;
    }
    throw TransportError(TransportError::Kind::kUnscripted,
                         "mock: unscripted prompt: " + request.prompt.substr(0, 80));
  }

  static MockReply reply_from(const nlohmann::json& value) {
    if (value.is_string()) return MockReply::ok(value.get<std::string>());
    if (value.contains("error")) {
      const auto kind = value.at("error").get<std::string>();
      if (kind == "timeout") return MockReply::fail(TransportError::Kind::kTimeout);
      if (kind == "server") return MockReply::fail(TransportError::Kind::kServer);
      if (kind == "connection") return MockReply::fail(TransportError::Kind::kConnection);
      if (kind == "rejected") return MockReply::fail(TransportError::Kind::kRejected);
      throw DataError("unknown mock error kind: " + kind);
    }
    return MockReply::ok(value.at("text").get<std::string>());
  }

  static std::vector<MockReply> replies_from(const nlohmann::json& value) {
    std::vector<MockReply> out;
    if (value.is_array()) {
      for (const auto& v : value) out.push_back(reply_from(v));
    } else {
      out.push_back(reply_from(value));
    }
    return out;
  }

  mutable std::mutex mu_;
  std::map<std::string, Cursor> exact_;
  std::vector<std::pair<std::string, Cursor>> rules_;
  std::deque<MockReply> sequence_;
  Responder responder_;
  std::chrono::milliseconds latency_{0};

  std::size_t in_flight_ = 0;
  std::size_t max_in_flight_ = 0;
  std::vector<std::string> prompts_;
};

}  // namespace cog::gateway
