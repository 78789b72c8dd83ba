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

// Lightweight extraction of methods and logging calls from Java-like source.
//
// The parser is brace-matching and signature-pattern based rather than a
// compiler front end: it tolerates partial files, skips regions whose braces
// do not balance, and ignores anything inside comments. A logging call is any
// `receiver.levelMethod(args...)` where the receiver is a configured logger
// name and levelMethod maps to a LogLevel.

#ifndef LOGFIX_SOURCE_PARSER_HPP_
#define LOGFIX_SOURCE_PARSER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logfix/error.hpp"
#include "logfix/model.hpp"

namespace logfix {

struct ParserConfig {
  std::set<std::string> logger_receivers{"log", "LOG", "logger", "LOGGER", "Log", "Logger"};
  // Keys are lowercase; lookups lowercase the call name first.
  std::map<std::string, LogLevel> level_methods = default_level_methods();
  int max_method_lines = 500;

  static std::map<std::string, LogLevel> default_level_methods();
  std::optional<LogLevel> level_for(std::string_view method_name) const;
};

struct ParseDiagnostic {
  ErrorKind kind = ErrorKind::kUnbalancedBraces;
  std::string path;
  int line = 0;
  std::string message;
};

struct MethodWithStatements {
  MethodContext context;
  std::vector<LoggingStatement> statements;
};

struct ExtractResult {
  std::vector<MethodWithStatements> methods;
  std::vector<ParseDiagnostic> errors;
};

// One entry per method body containing at least one logging call, in source
// order. Each call is attributed to its innermost enclosing named method.
ExtractResult extract_methods(std::string_view source, const std::string& path,
                              const ParserConfig& config,
                              const std::string& project_id = "");

// Every logging call in the method's source text, in source order. Line
// numbers are absolute (offset by method.start_line).
std::vector<LoggingStatement> find_logging_statements(const MethodContext& method,
                                                      const ParserConfig& config);

struct DecomposedMessage {
  std::string static_text;
  std::vector<Placeholder> placeholders;
  std::vector<std::string> variables;
};

// `format` is the source text of the format argument, possibly a `+` chain of
// literals and expressions. Concatenated expressions become kConcat
// placeholders and are listed before `args` in the variable order.
DecomposedMessage decompose_message(std::string_view format,
                                    const std::vector<std::string>& args);

// Parses text holding exactly one logging call (optionally ending in ';').
// Returns nullopt when the text is not a logger call under `config`.
std::optional<LoggingStatement> parse_statement(std::string_view raw_text,
                                                const ParserConfig& config);

// Byte-level map between a statement's raw_text and its decomposition.
struct StatementLayout {
  struct Literal {
    std::size_t static_begin = 0;
    std::size_t static_end = 0;
    std::size_t raw_begin = 0;  // first content byte inside the quotes
  };
  std::vector<Literal> literals;
  // [begin, end) byte spans in raw_text, one per variable, source order.
  std::vector<std::pair<std::size_t, std::size_t>> variable_spans;
};

// nullopt when raw_text does not parse as a call expression.
std::optional<StatementLayout> layout_of(std::string_view raw_text);

// Rebuilds source text from the statement's static_text and variables laid
// over the structure of its raw_text. For any statement produced by the
// parser the result equals raw_text byte for byte.
std::string render_statement(const LoggingStatement& statement);

// New raw text with static_text[offset, offset+length) replaced. The range
// must lie within one string literal.
std::string splice_static(const LoggingStatement& statement, std::size_t offset,
                          std::size_t length, std::string_view replacement);

// New raw text with the index-th variable expression replaced.
std::string splice_variable(const LoggingStatement& statement, std::size_t index,
                            std::string_view replacement);

// Replaces a statement occurrence inside its method and returns the updated
// context (statement_ids updated to the replacement's id).
MethodContext replace_statement(const MethodContext& context,
                                const LoggingStatement& original,
                                const LoggingStatement& replacement);

// Parameter, local, catch and loop variable names visible in the method, in
// order of first declaration.
std::vector<std::string> in_scope_variables(const MethodContext& method);

// Content hash of (path, line span, raw text).
std::string statement_id(const std::string& path, int start_line, int end_line,
                         std::string_view raw_text);

}  // namespace logfix

#endif  // LOGFIX_SOURCE_PARSER_HPP_
