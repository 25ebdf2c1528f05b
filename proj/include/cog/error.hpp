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

#include <stdexcept>
#include <string>

namespace cog {

// Base of every error the toolkit throws. The CLI maps the three families
// below onto exit codes 1, 2 and 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments or violated preconditions on caller input.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent data (files, tables, service payloads).
class DataError : public Error {
 public:
  using Error::Error;
};

class ProviderError : public Error {
 public:
  enum class Kind {
    kCredentialMissing,
    kUnreachable,  // transient failures persisted past the retry limit
    kRejected,     // 4xx-class, never retried
    kUnscripted,   // mock provider had no answer for the prompt
  };

  ProviderError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline const char* to_string(ProviderError::Kind kind) {
  switch (kind) {
    case ProviderError::Kind::kCredentialMissing: return "credential-missing";
    case ProviderError::Kind::kUnreachable: return "provider-unreachable";
    case ProviderError::Kind::kRejected: return "provider-rejected";
    case ProviderError::Kind::kUnscripted: return "unscripted";
  }
  return "unknown";
}

}  // namespace cog
