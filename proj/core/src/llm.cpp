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

#include "logfix/llm.hpp"

#include <httplib.h>

#include <algorithm>
#include <thread>

#include "logfix/error.hpp"
#include "logfix/prompts.hpp"
#include "logfix/util.hpp"

namespace logfix {

TokenBucket::TokenBucket(double capacity, std::chrono::milliseconds interval)
    : capacity_(capacity), tokens_(capacity), interval_(interval),
      last_(std::chrono::steady_clock::now()) {}

void TokenBucket::acquire() {
  if (interval_.count() <= 0) return;
  std::unique_lock<std::mutex> lock(mu_);
  while (true) {
    const auto now = std::chrono::steady_clock::now();
    const double elapsed =
        std::chrono::duration<double, std::milli>(now - last_).count() / interval_.count();
    tokens_ = std::min(capacity_, tokens_ + elapsed);
    last_ = now;
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const auto wait = std::chrono::duration<double, std::milli>((1.0 - tokens_) * interval_.count());
    lock.unlock();
    std::this_thread::sleep_for(wait);
    lock.lock();
  }
}

// ---------------------------------------------------------------------------

MockBackend::MockBackend() {
  defaults_["checker"] =
      "VERDICT: YES\nRATIONALE: the detected defect is present\n"
      "SEMANTICS: ${section:Statement}";
  defaults_["updater"] = "<UPDATED>${section:Statement}</UPDATED>";
  defaults_["mutator"] = "no mutation available";
}

std::unique_ptr<MockBackend> MockBackend::from_json(const Json& transcript) {
  auto mock = std::make_unique<MockBackend>();
  if (transcript.contains("rules")) {
    for (const auto& r : transcript.at("rules")) {
      Rule rule;
      rule.role = to_lower(r.value("role", std::string()));
      rule.contains = r.value("contains", std::vector<std::string>{});
      rule.reply = r.value("reply", std::string());
      rule.error = r.value("error", false);
      mock->add_rule(std::move(rule));
    }
  }
  if (transcript.contains("defaults")) {
    for (const auto& [role, reply] : transcript.at("defaults").items()) {
      mock->set_default(to_lower(role), reply.get<std::string>());
    }
  }
  return mock;
}

std::unique_ptr<MockBackend> MockBackend::load(const std::string& path) {
  try {
    return from_json(Json::parse(read_file(path)));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kDataError, path + ": " + e.what());
  }
}

void MockBackend::add_rule(Rule rule) {
  std::lock_guard<std::mutex> lock(mu_);
  rules_.push_back(std::move(rule));
}

void MockBackend::set_default(const std::string& role, std::string reply) {
  std::lock_guard<std::mutex> lock(mu_);
  defaults_[role] = std::move(reply);
}

namespace {

std::string substitute_sections(const std::string& reply, const std::string& prompt) {
  static constexpr std::string_view kOpen = "${section:";
  std::string out;
  std::size_t i = 0;
  while (true) {
    const auto b = reply.find(kOpen, i);
    if (b == std::string::npos) break;
    const auto e = reply.find('}', b);
    if (e == std::string::npos) break;
    out.append(reply, i, b - i);
    const std::string name = reply.substr(b + kOpen.size(), e - b - kOpen.size());
    out += prompt_section(prompt, name).value_or("");
    i = e + 1;
  }
  out.append(reply, i, std::string::npos);
  return out;
}

}  // namespace

std::string MockBackend::complete(const std::string& prompt, int, double) {
  const std::string role = prompt_role(prompt);
  std::lock_guard<std::mutex> lock(mu_);
  const Rule* hit = nullptr;
  for (const auto& rule : rules_) {
    if (!rule.role.empty() && rule.role != role) continue;
    const bool all = std::all_of(rule.contains.begin(), rule.contains.end(),
                                 [&](const std::string& s) { return prompt.find(s) != std::string::npos; });
    if (all) {
      hit = &rule;
      break;
    }
  }
  std::string reply;
  if (hit != nullptr) {
    if (hit->error) {
      calls_.push_back({role, prompt, "<error>"});
      throw Error(ErrorKind::kBackendError, "mock backend scripted failure");
    }
    reply = hit->reply;
  } else {
    auto it = defaults_.find(role);
    if (it == defaults_.end()) {
      calls_.push_back({role, prompt, "<error>"});
      throw Error(ErrorKind::kBackendError, "mock backend has no reply for role '" + role + "'");
    }
    reply = it->second;
  }
  reply = substitute_sections(reply, prompt);
  calls_.push_back({role, prompt, reply});
  return reply;
}

std::size_t MockBackend::call_count() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_.size();
}

std::vector<MockBackend::Call> MockBackend::calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_;
}

// ---------------------------------------------------------------------------

HttpBackend::HttpBackend(HttpBackendConfig config)
    : config_(std::move(config)), bucket_(1.0, config_.min_interval) {
  const std::string& url = config_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorKind::kConfigError, "backend endpoint must be an http(s) URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  scheme_host_port_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

std::string HttpBackend::complete(const std::string& prompt, int max_output_tokens,
                                  double temperature) {
  bucket_.acquire();
  httplib::Client client(scheme_host_port_);
  const auto secs = static_cast<time_t>(config_.timeout_seconds);
  const auto usecs = static_cast<time_t>((config_.timeout_seconds - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  Json body = {{"model", config_.model},
               {"messages", Json::array({Json{{"role", "user"}, {"content", prompt}}})},
               {"max_tokens", max_output_tokens},
               {"temperature", temperature}};
  httplib::Headers headers;
  if (!config_.token.empty()) headers.emplace("Authorization", "Bearer " + config_.token);

  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    throw Error(ErrorKind::kBackendError,
                "request to " + config_.endpoint + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw Error(ErrorKind::kBackendError,
                "backend returned HTTP " + std::to_string(res->status));
  }
  try {
    const Json reply = Json::parse(res->body);
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kBackendError, std::string("unexpected backend reply: ") + e.what());
  }
}

}  // namespace logfix
