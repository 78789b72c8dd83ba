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

// Prompt construction and reply parsing for the checker, updater and mutator
// roles. Prompts start with a "ROLE: <role>" line and are divided into
// "### <Name>" sections.

#ifndef LOGFIX_PROMPTS_HPP_
#define LOGFIX_PROMPTS_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logfix/model.hpp"
#include "logfix/source_parser.hpp"

namespace logfix {

// Replaces every {{slot}} in one pass. Throws Error(kConfigError) when the
// template names a slot that is not supplied.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& slots);

// Value of the leading ROLE line, lowercase; empty when absent.
std::string prompt_role(std::string_view prompt);
// Body of a "### name" section, trimmed.
std::optional<std::string> prompt_section(std::string_view prompt, std::string_view name);
// Text between the first `open` marker and the following `close` marker.
std::optional<std::string> text_between(std::string_view text, std::string_view open,
                                        std::string_view close);

struct CheckerVerdict {
  bool confirmed = false;
  std::string rationale;
  std::string semantic_notes;
};

std::string build_checker_prompt(const LoggingStatement& statement, const MethodContext& context,
                                 DefectLabel label);

// Throws Error(kMalformedReply) when VERDICT is missing or ambiguous.
CheckerVerdict parse_checker_reply(std::string_view text);

// Renders exemplars as numbered before/after blocks.
std::string render_exemplars(const std::vector<LogCentricChange>& exemplars);

std::string build_updater_prompt(const LoggingStatement& statement, const MethodContext& context,
                                 DefectLabel label, const CheckerVerdict& verdict,
                                 const std::vector<LogCentricChange>& exemplars);

// Throws Error(kMalformedReply) without <UPDATED> sentinels and
// Error(kNotALoggingStatement) when the enclosed text is not a logger call.
LoggingStatement parse_updater_reply(std::string_view text, const LoggingStatement& original,
                                     const ParserConfig& config = {});

std::string build_mutator_prompt(const LoggingStatement& statement, const MethodContext& context,
                                 DefectLabel label);

// Text between <MUTATED> sentinels, or nullopt.
std::optional<std::string> parse_mutator_reply(std::string_view text);

}  // namespace logfix

#endif  // LOGFIX_PROMPTS_HPP_
