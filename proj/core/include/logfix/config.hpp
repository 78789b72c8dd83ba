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

// Tool configuration file: one JSON object, every key optional, unknown
// keys rejected.

#ifndef LOGFIX_CONFIG_HPP_
#define LOGFIX_CONFIG_HPP_

#include <memory>
#include <string>

#include "logfix/detector.hpp"
#include "logfix/json_io.hpp"
#include "logfix/lexicon.hpp"
#include "logfix/llm.hpp"
#include "logfix/retrieval.hpp"
#include "logfix/source_parser.hpp"

namespace logfix {

struct RetrievalConfig {
  std::size_t k = 3;
  double k1 = 1.2;
  double b = 0.75;
};

struct BackendConfig {
  std::string kind = "mock";  // mock | http
  std::string endpoint;
  std::string model;
  double timeout_seconds = 60.0;
  int min_interval_ms = 500;
  std::string transcript;  // mock replies file; built-in defaults when empty
};

struct PathsConfig {
  std::string typos;  // empty selects the bundled file
  std::string verbs;
  std::string verb_stopwords;
  std::string antonyms;
};

struct ToolConfig {
  ParserConfig parser;
  TrainConfig train;
  RetrievalConfig retrieval;
  BackendConfig backend;
  PathsConfig paths;
  std::size_t jobs = 4;
  std::uint64_t seed = 42;
};

// Throws Error(kConfigError) on unknown keys or invalid values.
ToolConfig parse_tool_config(const Json& j);
ToolConfig load_tool_config(const std::string& path);
Json tool_config_json(const ToolConfig& config);

// Lexicons named by the config, loaded from disk or the bundled copies.
struct Lexicons {
  std::shared_ptr<const TypoLexicon> typos;
  std::shared_ptr<const VerbLexicon> verbs;
  std::shared_ptr<const AntonymTable> antonyms;
};
Lexicons load_lexicons(const PathsConfig& paths);

// The configured backend. The HTTP token comes from LOGFIX_LLM_TOKEN.
std::unique_ptr<LlmBackend> make_backend(const BackendConfig& config);

}  // namespace logfix

#endif  // LOGFIX_CONFIG_HPP_
