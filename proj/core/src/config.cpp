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

#include "logfix/config.hpp"

#include <cstdlib>

#include "logfix/error.hpp"
#include "logfix/util.hpp"

namespace logfix {

namespace {

[[noreturn]] void unknown(const std::string& section, const std::string& key) {
  throw Error(ErrorKind::kConfigError, "unknown config key '" + section + key + "'");
}

void require_object(const Json& j, const std::string& what) {
  if (!j.is_object()) throw Error(ErrorKind::kConfigError, what + " must be an object");
}

ParserConfig parse_parser(const Json& j) {
  require_object(j, "parser");
  ParserConfig p;
  for (const auto& [key, value] : j.items()) {
    if (key == "logger_receivers") {
      p.logger_receivers = value.get<std::set<std::string>>();
    } else if (key == "level_methods") {
      require_object(value, "parser.level_methods");
      p.level_methods.clear();
      for (const auto& [name, level] : value.items()) {
        p.level_methods[to_lower(name)] = parse_level(level.get<std::string>());
      }
    } else if (key == "max_method_lines") {
      p.max_method_lines = value.get<int>();
    } else {
      unknown("parser.", key);
    }
  }
  if (p.max_method_lines < 1) throw Error(ErrorKind::kConfigError, "max_method_lines must be positive");
  return p;
}

}  // namespace

ToolConfig parse_tool_config(const Json& j) {
  require_object(j, "config");
  ToolConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "parser") {
        c.parser = parse_parser(value);
      } else if (key == "train") {
        from_json(value, c.train);
      } else if (key == "retrieval") {
        require_object(value, "retrieval");
        for (const auto& [k, v] : value.items()) {
          if (k == "k") c.retrieval.k = v.get<std::size_t>();
          else if (k == "k1") c.retrieval.k1 = v.get<double>();
          else if (k == "b") c.retrieval.b = v.get<double>();
          else unknown("retrieval.", k);
        }
      } else if (key == "backend") {
        require_object(value, "backend");
        for (const auto& [k, v] : value.items()) {
          if (k == "kind") c.backend.kind = v.get<std::string>();
          else if (k == "endpoint") c.backend.endpoint = v.get<std::string>();
          else if (k == "model") c.backend.model = v.get<std::string>();
          else if (k == "timeout_seconds") c.backend.timeout_seconds = v.get<double>();
          else if (k == "min_interval_ms") c.backend.min_interval_ms = v.get<int>();
          else if (k == "transcript") c.backend.transcript = v.get<std::string>();
          else unknown("backend.", k);
        }
      } else if (key == "paths") {
        require_object(value, "paths");
        for (const auto& [k, v] : value.items()) {
          if (k == "typos") c.paths.typos = v.get<std::string>();
          else if (k == "verbs") c.paths.verbs = v.get<std::string>();
          else if (k == "verb_stopwords") c.paths.verb_stopwords = v.get<std::string>();
          else if (k == "antonyms") c.paths.antonyms = v.get<std::string>();
          else unknown("paths.", k);
        }
      } else if (key == "jobs") {
        c.jobs = value.get<std::size_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else {
        unknown("", key);
      }
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kConfigError, std::string("bad config value: ") + e.what());
  }
  c.train.validate();
  if (c.retrieval.k == 0) throw Error(ErrorKind::kConfigError, "retrieval.k must be positive");
  if (c.backend.kind != "mock" && c.backend.kind != "http") {
    throw Error(ErrorKind::kConfigError, "backend.kind must be mock or http");
  }
  if (c.jobs == 0) throw Error(ErrorKind::kConfigError, "jobs must be positive");
  return c;
}

ToolConfig load_tool_config(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kConfigError, path + ": " + e.what());
  }
  return parse_tool_config(j);
}

Json tool_config_json(const ToolConfig& c) {
  Json levels = Json::object();
  for (const auto& [name, level] : c.parser.level_methods) levels[name] = level_name(level);
  return Json{
      {"parser", Json{{"logger_receivers", c.parser.logger_receivers},
                      {"level_methods", levels},
                      {"max_method_lines", c.parser.max_method_lines}}},
      {"train", c.train},
      {"retrieval", Json{{"k", c.retrieval.k}, {"k1", c.retrieval.k1}, {"b", c.retrieval.b}}},
      {"backend", Json{{"kind", c.backend.kind},
                       {"endpoint", c.backend.endpoint},
                       {"model", c.backend.model},
                       {"timeout_seconds", c.backend.timeout_seconds},
                       {"min_interval_ms", c.backend.min_interval_ms},
                       {"transcript", c.backend.transcript}}},
      {"paths", Json{{"typos", c.paths.typos},
                     {"verbs", c.paths.verbs},
                     {"verb_stopwords", c.paths.verb_stopwords},
                     {"antonyms", c.paths.antonyms}}},
      {"jobs", c.jobs},
      {"seed", c.seed}};
}

Lexicons load_lexicons(const PathsConfig& paths) {
  Lexicons lx;
  auto borrowed = [](const auto& ref) {
    using T = std::remove_cvref_t<decltype(ref)>;
    return std::shared_ptr<const T>(&ref, [](const T*) {});
  };
  lx.typos = paths.typos.empty() ? borrowed(TypoLexicon::builtin())
                                 : std::make_shared<const TypoLexicon>(TypoLexicon::load(paths.typos));
  if (paths.verbs.empty() && paths.verb_stopwords.empty()) {
    lx.verbs = borrowed(VerbLexicon::builtin());
  } else {
    if (paths.verbs.empty() || paths.verb_stopwords.empty()) {
      throw Error(ErrorKind::kConfigError, "paths.verbs and paths.verb_stopwords go together");
    }
    lx.verbs = std::make_shared<const VerbLexicon>(VerbLexicon::load(paths.verbs, paths.verb_stopwords));
  }
  lx.antonyms = paths.antonyms.empty()
                    ? borrowed(AntonymTable::builtin())
                    : std::make_shared<const AntonymTable>(AntonymTable::load(paths.antonyms));
  return lx;
}

std::unique_ptr<LlmBackend> make_backend(const BackendConfig& config) {
  if (config.kind == "mock") {
    if (config.transcript.empty()) return std::make_unique<MockBackend>();
    return MockBackend::load(config.transcript);
  }
  HttpBackendConfig http;
  http.endpoint = config.endpoint;
  http.model = config.model;
  http.timeout_seconds = config.timeout_seconds;
  http.min_interval = std::chrono::milliseconds(config.min_interval_ms);
  if (const char* token = std::getenv("LOGFIX_LLM_TOKEN")) http.token = token;
  return std::make_unique<HttpBackend>(std::move(http));
}

}  // namespace logfix
