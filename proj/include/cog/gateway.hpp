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
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cog/detail/parallel.hpp"
#include "cog/detail/rng.hpp"
#include "cog/error.hpp"

namespace cog::gateway {

struct CompletionRequest {
  std::string prompt;
  std::string model;
  double temperature = 0.0;
  int max_tokens = 256;
  std::vector<std::string> stop_sequences;
};

struct CompletionResult {
  std::string text;
  std::string model;
  std::int64_t latency_ms = 0;
  int attempt = 1;
};

/// Raised by a Provider for a single failed exchange. The gateway decides
/// whether to retry from the kind.
class TransportError : public std::runtime_error {
 public:
  enum class Kind { kTimeout, kServer, kConnection, kRejected, kCredentialMissing, kUnscripted };

  TransportError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

  bool retryable() const noexcept {
    return kind_ == Kind::kTimeout || kind_ == Kind::kServer || kind_ == Kind::kConnection;
  }

 private:
  Kind kind_;
};

/// One backend able to turn a prompt into completion text.
class Provider {
 public:
  virtual ~Provider() = default;
  virtual std::string complete(const CompletionRequest& request) = 0;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds base_delay{500};
  double multiplier = 2.0;
  std::chrono::milliseconds max_delay{8000};
  double jitter = 0.25;  // +/- fraction of the nominal delay
};

struct GatewayOptions {
  RetryPolicy retry;
  std::size_t max_in_flight = 8;
  std::uint64_t jitter_seed = 0;
  // Overridable so tests do not actually wait out backoff.
  std::function<void(std::chrono::milliseconds)> sleep = [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
};

/// Result of one position of a batch: either a result or an error message.
struct CompletionOutcome {
  std::optional<CompletionResult> result;
  std::string error;
  std::optional<ProviderError::Kind> error_kind;

  bool ok() const { return result.has_value(); }
};

/// Counting gate over in-flight provider calls.
class InFlightLimiter {
 public:
  explicit InFlightLimiter(std::size_t limit) : limit_(std::max<std::size_t>(1, limit)) {}

  void acquire() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return active_ < limit_; });
    ++active_;
  }

  void release() {
    {
      std::lock_guard lock(mu_);
      --active_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::size_t active_ = 0;
  std::size_t limit_;
};

/// Provider-agnostic completion client: validates requests, bounds the
/// number of concurrent provider calls, and retries transient failures.
/// Shareable across threads.
class Gateway {
 public:
  explicit Gateway(std::shared_ptr<Provider> provider, GatewayOptions options = {})
      : provider_(std::move(provider)),
        options_(std::move(options)),
        limiter_(options_.max_in_flight),
        jitter_rng_(options_.jitter_seed) {
    if (!provider_) throw UsageError("gateway requires a provider");
    if (options_.retry.max_attempts < 1) throw UsageError("retry limit must be >= 1");
  }

  const GatewayOptions& options() const { return options_; }

  CompletionResult complete(const CompletionRequest& request) {
    if (request.prompt.empty()) throw UsageError("completion request has an empty prompt");
    if (request.max_tokens <= 0) throw UsageError("max_tokens must be positive");
    if (request.temperature < 0) throw UsageError("temperature must be >= 0");

    const auto start = std::chrono::steady_clock::now();
    const auto& retry = options_.retry;
    for (int attempt = 1;; ++attempt) {
      std::string text;
      try {
        limiter_.acquire();
        struct Release {
          InFlightLimiter& l;
          ~Release() { l.release(); }
        } release{limiter_};
        text = provider_->complete(request);
      } catch (const TransportError& e) {
        if (!e.retryable()) throw ProviderError(map_kind(e.kind()), e.what());
        if (attempt >= retry.max_attempts) {
          throw ProviderError(ProviderError::Kind::kUnreachable,
                              std::string("gave up after ") + std::to_string(attempt) +
                                  " attempts: " + e.what());
        }
        options_.sleep(backoff(attempt));
        continue;
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;
      return CompletionResult{
          std::move(text), request.model,
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count(), attempt};
    }
  }

  /// Runs every request with at most `parallelism` of them in flight (the
  /// gateway-wide bound also applies). Result i always belongs to request i;
  /// failures are reported per position.
  std::vector<CompletionOutcome> complete_batch(const std::vector<CompletionRequest>& requests,
                                                std::size_t parallelism) {
    if (parallelism == 0) throw UsageError("parallelism must be >= 1");
    std::vector<CompletionOutcome> outcomes(requests.size());
    detail::parallel_for(requests.size(), parallelism,
                         [&](std::size_t i) { outcomes[i] = complete_outcome(requests[i]); });
    return outcomes;
  }

  CompletionOutcome complete_outcome(const CompletionRequest& request) {
    CompletionOutcome out;
    try {
      out.result = complete(request);
    } catch (const ProviderError& e) {
      out.error = e.what();
      out.error_kind = e.kind();
    } catch (const std::exception& e) {
      out.error = e.what();
    }
    return out;
  }

 private:
  static ProviderError::Kind map_kind(TransportError::Kind kind) {
    switch (kind) {
      case TransportError::Kind::kRejected: return ProviderError::Kind::kRejected;
      case TransportError::Kind::kCredentialMissing: return ProviderError::Kind::kCredentialMissing;
      case TransportError::Kind::kUnscripted: return ProviderError::Kind::kUnscripted;
      default: return ProviderError::Kind::kUnreachable;
    }
  }

  std::chrono::milliseconds backoff(int attempt) {
    const auto& retry = options_.retry;
    double nominal = static_cast<double>(retry.base_delay.count());
    for (int i = 1; i < attempt; ++i) nominal *= retry.multiplier;
    nominal = std::min(nominal, static_cast<double>(retry.max_delay.count()));
    double unit;
    {
      std::lock_guard lock(jitter_mu_);
      unit = static_cast<double>(jitter_rng_.below(1'000'001)) / 1'000'000.0;
    }
    const double factor = 1.0 + retry.jitter * (2.0 * unit - 1.0);
    return std::chrono::milliseconds(static_cast<std::int64_t>(nominal * factor));
  }

  std::shared_ptr<Provider> provider_;
  GatewayOptions options_;
  InFlightLimiter limiter_;
  std::mutex jitter_mu_;
  detail::SeededRng jitter_rng_;
};

}  // namespace cog::gateway
