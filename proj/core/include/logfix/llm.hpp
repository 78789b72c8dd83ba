// Copyright 2026 The logfix Authors.
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

// Text-completion backends: a scripted mock for tests and offline runs, and
// an HTTP client for OpenAI-style chat-completion endpoints.

#ifndef LOGFIX_LLM_HPP_
#define LOGFIX_LLM_HPP_

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "logfix/json_io.hpp"

namespace logfix {

struct BackendCapabilities {
  bool supports_temperature = false;
};

class LlmBackend {
 public:
  virtual ~LlmBackend() = default;
  virtual std::string name() const = 0;
  // Returns the completion text or throws Error(kBackendError).
  virtual std::string complete(const std::string& prompt, int max_output_tokens,
                               double temperature) = 0;
  virtual BackendCapabilities capabilities() const { return {}; }
};

// Blocks callers so that at most `capacity` requests start per `interval`.
class TokenBucket {
 public:
  TokenBucket(double capacity, std::chrono::milliseconds interval);
  void acquire();

 private:
  std::mutex mu_;
  double capacity_;
  double tokens_;
  std::chrono::milliseconds interval_;
  std::chrono::steady_clock::time_point last_;
};

// Replays canned replies. A rule matches when the prompt's ROLE line equals
// `role` (or role is empty) and the prompt contains every `contains` string;
// the first matching rule wins, then the per-role default. Replies may embed
// ${section:Name}, replaced by that section of the prompt.
class MockBackend : public LlmBackend {
 public:
  struct Rule {
    std::string role;
    std::vector<std::string> contains;
    std::string reply;
    bool error = false;  // throw a backend error instead of replying
  };

  struct Call {
    std::string role;
    std::string prompt;
    std::string reply;
  };

  // Built-in defaults: the checker confirms, the updater echoes the
  // statement, the mutator declines.
  MockBackend();

  // {"rules": [{"role", "contains": [...], "reply", "error"}],
  //  "defaults": {"checker": "...", ...}}
  static std::unique_ptr<MockBackend> from_json(const Json& transcript);
  static std::unique_ptr<MockBackend> load(const std::string& path);

  void add_rule(Rule rule);
  void set_default(const std::string& role, std::string reply);

  std::string name() const override { return "mock"; }
  std::string complete(const std::string& prompt, int max_output_tokens,
                       double temperature) override;
  BackendCapabilities capabilities() const override { return {true}; }

  std::size_t call_count() const;
  std::vector<Call> calls() const;

 private:
  mutable std::mutex mu_;
  std::vector<Rule> rules_;
  std::map<std::string, std::string> defaults_;
  std::vector<Call> calls_;
};

struct HttpBackendConfig {
  std::string endpoint;  // e.g. https://host/v1/chat/completions
  std::string model;
  double timeout_seconds = 60.0;
  std::string token;  // bearer token; normally from LOGFIX_LLM_TOKEN
  std::chrono::milliseconds min_interval{500};
};

class HttpBackend : public LlmBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  std::string name() const override { return "http"; }
  std::string complete(const std::string& prompt, int max_output_tokens,
                       double temperature) override;
  BackendCapabilities capabilities() const override { return {true}; }

 private:
  HttpBackendConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  TokenBucket bucket_;
};

}  // namespace logfix

#endif  // LOGFIX_LLM_HPP_
