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

#include <atomic>
#include <thread>

#include <gtest/gtest.h>

#include "cog/gateway.hpp"
#include "cog/gateway/http_provider.hpp"
#include "cog/gateway/mock_provider.hpp"
#include "test_support.hpp"

namespace cog::gateway {
namespace {

using testing::fast_options;

CompletionRequest req(std::string prompt) { return {std::move(prompt), "mock-model", 0.0, 64, {}}; }

TEST(Gateway, ScriptedPrompt) {
  auto mock = std::make_shared<MockProvider>();
  mock->script("P1", "R1");
  Gateway gw(mock, fast_options());
  const auto r = gw.complete(req("P1"));
  EXPECT_EQ(r.text, "R1");
  EXPECT_EQ(r.attempt, 1);
  EXPECT_EQ(r.model, "mock-model");
  EXPECT_GE(r.latency_ms, 0);
}

TEST(Gateway, RetriesTransientFailures) {
  auto mock = std::make_shared<MockProvider>();
  mock->script("P", {MockReply::fail(TransportError::Kind::kServer), MockReply::fail(TransportError::Kind::kTimeout),
                     MockReply::ok("R")});
  std::vector<std::chrono::milliseconds> waits;
  auto options = fast_options();
  options.sleep = [&](std::chrono::milliseconds d) { waits.push_back(d); };
  Gateway gw(mock, options);
  const auto r = gw.complete(req("P"));
  EXPECT_EQ(r.text, "R");
  EXPECT_EQ(r.attempt, 3);
  ASSERT_EQ(waits.size(), 2u);
  // Exponential with +/-25% jitter around 500ms and 1000ms.
  EXPECT_GE(waits[0].count(), 375);
  EXPECT_LE(waits[0].count(), 625);
  EXPECT_GE(waits[1].count(), 750);
  EXPECT_LE(waits[1].count(), 1250);
}

TEST(Gateway, GivesUpAfterRetryLimit) {
  auto mock = std::make_shared<MockProvider>();
  mock->script("P", {MockReply::fail(TransportError::Kind::kConnection)});
  Gateway gw(mock, fast_options());
  try {
    gw.complete(req("P"));
    FAIL() << "expected ProviderError";
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.kind(), ProviderError::Kind::kUnreachable);
  }
  EXPECT_EQ(mock->call_count(), 3u);
}

TEST(Gateway, RejectedIsNotRetried) {
  auto mock = std::make_shared<MockProvider>();
  mock->script("P", {MockReply::fail(TransportError::Kind::kRejected), MockReply::ok("never")});
  Gateway gw(mock, fast_options());
  try {
    gw.complete(req("P"));
    FAIL() << "expected ProviderError";
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.kind(), ProviderError::Kind::kRejected);
  }
  EXPECT_EQ(mock->call_count(), 1u);
}

TEST(Gateway, PreconditionViolations) {
  auto mock = std::make_shared<MockProvider>();
  Gateway gw(mock, fast_options());
  EXPECT_THROW(gw.complete(req("")), UsageError);
  auto bad = req("P");
  bad.max_tokens = 0;
  EXPECT_THROW(gw.complete(bad), UsageError);
  EXPECT_EQ(mock->call_count(), 0u);
}

TEST(MockProvider, UnscriptedPromptIsDistinguishable) {
  Gateway gw(std::make_shared<MockProvider>(), fast_options());
  try {
    gw.complete(req("nobody scripted this"));
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.kind(), ProviderError::Kind::kUnscripted);
  }
}

TEST(MockProvider, ExactMatchBeatsSequence) {
  auto mock = std::make_shared<MockProvider>();
  mock->script("keyed", "K");
  mock->push_sequence(MockReply::ok("S1"));
  mock->push_sequence(MockReply::ok("S2"));
  Gateway gw(mock, fast_options());
  EXPECT_EQ(gw.complete(req("a")).text, "S1");
  EXPECT_EQ(gw.complete(req("keyed")).text, "K");
  EXPECT_EQ(gw.complete(req("b")).text, "S2");
  EXPECT_THROW(gw.complete(req("c")), ProviderError);
}

TEST(MockProvider, JsonScript) {
  const auto script = nlohmann::json::parse(R"({
    "prompts": {"P1": "R1", "P2": [{"error": "server"}, {"text": "R2"}]},
    "rules": [{"contains": "Technique Number: ", "reply": "Paraphrase: X"}],
    "sequence": ["S1"]
  })");
  Gateway gw(MockProvider::from_json(script), fast_options());
  EXPECT_EQ(gw.complete(req("P1")).text, "R1");
  const auto r2 = gw.complete(req("P2"));
  EXPECT_EQ(r2.text, "R2");
  EXPECT_EQ(r2.attempt, 2);
  EXPECT_EQ(gw.complete(req("...Technique Number: 2...")).text, "Paraphrase: X");
  EXPECT_EQ(gw.complete(req("other")).text, "S1");
  EXPECT_THROW(MockProvider::from_json(nlohmann::json::parse(R"({"sequence": [{"error": "bogus"}]})")), DataError);
}

TEST(MockProvider, IdenticalSequencesGiveIdenticalResults) {
  auto run = [] {
    auto mock = std::make_shared<MockProvider>();
    mock->script("A", {MockReply::ok("a1"), MockReply::ok("a2")});
    mock->push_sequence(MockReply::ok("s1"));
    mock->push_sequence(MockReply::fail(TransportError::Kind::kRejected));
    Gateway gw(mock, fast_options());
    std::vector<std::string> out;
    for (const auto* p : {"A", "x", "A", "A", "y"}) {
      const auto o = gw.complete_outcome(req(p));
      out.push_back(o.ok() ? o.result->text : "ERR:" + o.error);
    }
    return out;
  };
  const auto first = run();
  EXPECT_EQ(first, run());
  EXPECT_EQ(first[3], "a2");  // last reply repeats
}

TEST(CompleteBatch, OrderedResults) {
  auto mock = std::make_shared<MockProvider>();
  for (int i = 0; i < 3; ++i) mock->script("P" + std::to_string(i), "R" + std::to_string(i));
  Gateway gw(mock, fast_options());
  const auto out = gw.complete_batch({req("P0"), req("P1"), req("P2")}, 1);
  ASSERT_EQ(out.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    ASSERT_TRUE(out[static_cast<std::size_t>(i)].ok());
    EXPECT_EQ(out[static_cast<std::size_t>(i)].result->text, "R" + std::to_string(i));
  }
}

TEST(CompleteBatch, FailuresStayInTheirPosition) {
  auto mock = std::make_shared<MockProvider>();
  mock->script("P0", "R0");
  mock->script("P1", {MockReply::fail(TransportError::Kind::kServer)});
  mock->script("P2", "R2");
  Gateway gw(mock, fast_options());
  const auto out = gw.complete_batch({req("P0"), req("P1"), req("P2")}, 3);
  EXPECT_TRUE(out[0].ok());
  EXPECT_FALSE(out[1].ok());
  EXPECT_EQ(out[1].error_kind, ProviderError::Kind::kUnreachable);
  EXPECT_TRUE(out[2].ok());
  EXPECT_EQ(out[2].result->text, "R2");
}

TEST(CompleteBatch, InFlightBoundHolds) {
  auto mock = std::make_shared<MockProvider>();
  std::vector<CompletionRequest> requests;
  for (int i = 0; i < 100; ++i) {
    mock->script("P" + std::to_string(i), "R" + std::to_string(i));
    requests.push_back(req("P" + std::to_string(i)));
  }
  mock->set_latency(std::chrono::milliseconds(2));
  Gateway gw(mock, fast_options(64));
  const auto out = gw.complete_batch(requests, 8);
  EXPECT_LE(mock->max_in_flight(), 8u);
  EXPECT_GE(mock->max_in_flight(), 2u);
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i].result->text, "R" + std::to_string(i));
  EXPECT_THROW(gw.complete_batch(requests, 0), UsageError);
}

TEST(Gateway, SharedBoundAcrossCallers) {
  auto mock = std::make_shared<MockProvider>();
  mock->set_responder([](const CompletionRequest&) { return MockReply::ok("r"); });
  mock->set_latency(std::chrono::milliseconds(2));
  Gateway gw(mock, fast_options(3));
  std::vector<std::jthread> callers;
  for (int t = 0; t < 4; ++t) {
    callers.emplace_back([&] {
      std::vector<CompletionRequest> rs(10, req("p"));
      gw.complete_batch(rs, 4);
    });
  }
  callers.clear();
  EXPECT_LE(mock->max_in_flight(), 3u);
  EXPECT_EQ(mock->call_count(), 40u);
}

// --- live provider against a local stand-in server -------------------------

class FakeChatServer {
 public:
  FakeChatServer() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& rq, httplib::Response& rs) {
      ++hits_;
      last_body_ = rq.body;
      last_auth_ = rq.get_header_value("Authorization");
      if (fail_first_ > 0) {
        --fail_first_;
        rs.status = status_on_fail_;
        return;
      }
      rs.set_content(R"({"choices":[{"message":{"role":"assistant","content":"hello"}}]})", "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeChatServer() {
    server_.stop();
    thread_.join();
  }

  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions"; }

  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> hits_{0};
  int fail_first_ = 0;
  int status_on_fail_ = 500;
  std::string last_body_;
  std::string last_auth_;
};

TEST(HttpChatProvider, SendsSingleUserMessage) {
  FakeChatServer server;
  Gateway gw(std::make_shared<HttpChatProvider>(server.endpoint(), "sk-test"), fast_options());
  CompletionRequest r{"Say hi", "gpt-4-0613", 0.0, 16, {"\n"}};
  EXPECT_EQ(gw.complete(r).text, "hello");
  const auto body = nlohmann::json::parse(server.last_body_);
  EXPECT_EQ(body["model"], "gpt-4-0613");
  ASSERT_EQ(body["messages"].size(), 1u);
  EXPECT_EQ(body["messages"][0]["role"], "user");
  EXPECT_EQ(body["messages"][0]["content"], "Say hi");
  EXPECT_EQ(body["temperature"], 0.0);
  EXPECT_EQ(body["max_tokens"], 16);
  EXPECT_EQ(body["stop"], nlohmann::json::array({"\n"}));
  EXPECT_EQ(server.last_auth_, "Bearer sk-test");
}

TEST(HttpChatProvider, Retries5xx) {
  FakeChatServer server;
  server.fail_first_ = 2;
  Gateway gw(std::make_shared<HttpChatProvider>(server.endpoint(), "k"), fast_options());
  const auto r = gw.complete(req("x"));
  EXPECT_EQ(r.attempt, 3);
  EXPECT_EQ(server.hits_, 3);
}

TEST(HttpChatProvider, Rejects4xxWithoutRetry) {
  FakeChatServer server;
  server.fail_first_ = 5;
  server.status_on_fail_ = 401;
  Gateway gw(std::make_shared<HttpChatProvider>(server.endpoint(), "k"), fast_options());
  try {
    gw.complete(req("x"));
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.kind(), ProviderError::Kind::kRejected);
  }
  EXPECT_EQ(server.hits_, 1);
}

TEST(HttpChatProvider, MissingCredential) {
  Gateway gw(std::make_shared<HttpChatProvider>("http://127.0.0.1:9/v1", ""), fast_options());
  try {
    gw.complete(req("x"));
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.kind(), ProviderError::Kind::kCredentialMissing);
  }
}

TEST(HttpChatProvider, UnreachableAfterRetries) {
  // Port 9 (discard) is closed on test hosts.
  Gateway gw(std::make_shared<HttpChatProvider>("http://127.0.0.1:9/v1", "k", std::chrono::seconds(2)),
             fast_options());
  try {
    gw.complete(req("x"));
    FAIL();
  } catch (const ProviderError& e) {
    EXPECT_EQ(e.kind(), ProviderError::Kind::kUnreachable);
  }
}

TEST(HttpChatProvider, BadEndpointUrl) {
  EXPECT_THROW(HttpChatProvider("localhost:8080", "k"), UsageError);
  EXPECT_THROW(HttpChatProvider("ftp://x/y", "k"), UsageError);
}

}  // namespace
}  // namespace cog::gateway
