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

#include "logfix/prompts.hpp"

#include <regex>

#include "logfix/data.hpp"
#include "logfix/error.hpp"
#include "logfix/lexicon.hpp"
#include "logfix/util.hpp"

namespace logfix {

namespace {

constexpr std::string_view kCheckerFormat =
    "Reply with exactly these three labeled lines:\n"
    "VERDICT: YES if the statement has the defect described above, otherwise NO\n"
    "RATIONALE: the reason for your verdict\n"
    "SEMANTICS: what the statement records and what the surrounding code does";

constexpr std::string_view kUpdaterFormat =
    "Reply with the corrected statement as one line of code between the markers "
    "<UPDATED> and </UPDATED>, for example:\n"
    "<UPDATED>logger.info(\"Loaded {} entries\", count);</UPDATED>";

constexpr std::string_view kMutatorFormat =
    "Reply with the rewritten statement as one line of code between the markers "
    "<MUTATED> and </MUTATED>.";

std::string label_title(DefectLabel label) {
  switch (label) {
    case DefectLabel::kStatementCode: return "statement-code inconsistency";
    case DefectLabel::kStaticDynamic: return "static-dynamic inconsistency";
    case DefectLabel::kTemporal: return "temporal inconsistency";
    case DefectLabel::kReadability: return "readability issue";
    case DefectLabel::kNonDefect: break;
  }
  return "no defect";
}

std::map<std::string, std::string> base_slots(const LoggingStatement& statement,
                                              const MethodContext& context, DefectLabel label) {
  if (label == DefectLabel::kNonDefect) {
    throw Error(ErrorKind::kConfigError, "prompts require a defect label");
  }
  return {
      {"statement", statement.raw_text},
      {"context", context.source_text},
      {"defect_type", std::string(label_name(label)) + " (" + label_title(label) + ")"},
      {"defect_definition", defect_definition(label_name(label))},
  };
}

std::string strip_decoration(std::string_view text) {
  std::size_t b = 0;
  while (b < text.size() && (text[b] == '*' || text[b] == '_' || text[b] == ' ' || text[b] == '\t')) ++b;
  std::size_t e = text.size();
  while (e > b && (text[e - 1] == '*' || text[e - 1] == '_' || std::isspace(static_cast<unsigned char>(text[e - 1])))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace

std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& slots) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    const auto open = tmpl.find("{{", i);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(i));
      break;
    }
    const auto close = tmpl.find("}}", open + 2);
    if (close == std::string_view::npos) {
      out.append(tmpl.substr(i));
      break;
    }
    out.append(tmpl.substr(i, open - i));
    const std::string name = trim(tmpl.substr(open + 2, close - open - 2));
    auto it = slots.find(name);
    if (it == slots.end()) {
      throw Error(ErrorKind::kConfigError, "unfilled template slot '" + name + "'");
    }
    out.append(it->second);
    i = close + 2;
  }
  return out;
}

std::string prompt_role(std::string_view prompt) {
  const auto nl = prompt.find('\n');
  const std::string first = trim(prompt.substr(0, nl));
  static constexpr std::string_view kPrefix = "ROLE:";
  if (first.size() < kPrefix.size() || to_upper(first.substr(0, kPrefix.size())) != kPrefix) {
    return "";
  }
  return to_lower(trim(std::string_view(first).substr(kPrefix.size())));
}

std::optional<std::string> prompt_section(std::string_view prompt, std::string_view name) {
  const auto lines = split_lines(prompt);
  std::string body;
  bool inside = false;
  bool found = false;
  for (const auto& line : lines) {
    if (line.rfind("### ", 0) == 0) {
      if (inside) break;
      if (trim(std::string_view(line).substr(4)) == name) {
        inside = true;
        found = true;
      }
      continue;
    }
    if (inside) {
      body += line;
      body += '\n';
    }
  }
  if (!found) return std::nullopt;
  return trim(body);
}

std::optional<std::string> text_between(std::string_view text, std::string_view open,
                                        std::string_view close) {
  const auto b = text.find(open);
  if (b == std::string_view::npos) return std::nullopt;
  const auto start = b + open.size();
  const auto e = text.find(close, start);
  if (e == std::string_view::npos) return std::nullopt;
  return std::string(text.substr(start, e - start));
}

std::string build_checker_prompt(const LoggingStatement& statement, const MethodContext& context,
                                 DefectLabel label) {
  auto slots = base_slots(statement, context, label);
  slots["format_instructions"] = std::string(kCheckerFormat);
  return render_template(embedded_data("checker_prompt.txt"), slots);
}

CheckerVerdict parse_checker_reply(std::string_view text) {
  static const std::regex kField(R"(^[\s>*#_-]*(verdict|rationale|semantics)[\s*_]*[:=]\s*(.*)$)",
                                 std::regex::icase);
  static const std::regex kYes(R"(\byes\b)", std::regex::icase);
  static const std::regex kNo(R"(\bno\b)", std::regex::icase);

  std::vector<std::string> verdicts;
  std::string rationale;
  std::string semantics;
  std::string* current = nullptr;
  for (const auto& line : split_lines(text)) {
    std::smatch m;
    if (std::regex_match(line, m, kField)) {
      const std::string field = to_lower(m[1].str());
      const std::string value = strip_decoration(m[2].str());
      if (field == "verdict") {
        verdicts.push_back(value);
        current = nullptr;
      } else {
        current = field == "rationale" ? &rationale : &semantics;
        if (!current->empty()) *current += ' ';
        *current += value;
      }
    } else if (current != nullptr && !trim(line).empty()) {
      if (!current->empty()) *current += ' ';
      *current += trim(line);
    }
  }
  if (verdicts.empty()) throw Error(ErrorKind::kMalformedReply, "reply has no VERDICT field");
  bool yes = false;
  bool no = false;
  for (const auto& v : verdicts) {
    yes = yes || std::regex_search(v, kYes);
    no = no || std::regex_search(v, kNo);
  }
  if (yes == no) {
    throw Error(ErrorKind::kMalformedReply,
                yes ? "VERDICT is ambiguous" : "VERDICT is neither YES nor NO");
  }
  CheckerVerdict verdict;
  verdict.confirmed = yes;
  verdict.rationale = trim(rationale);
  verdict.semantic_notes = trim(semantics);
  if (!verdict.confirmed && verdict.rationale.empty()) {
    verdict.rationale = "checker rejected the detection without giving a reason";
  }
  return verdict;
}

std::string render_exemplars(const std::vector<LogCentricChange>& exemplars) {
  if (exemplars.empty()) return "No examples available.";
  std::string out;
  for (std::size_t i = 0; i < exemplars.size(); ++i) {
    const auto& e = exemplars[i];
    if (i > 0) out += "\n\n";
    out += "Example " + std::to_string(i + 1) + ":\n";
    out += "before: " + normalize_whitespace(e.before.raw_text) + "\n";
    out += "after: " + normalize_whitespace(e.after.raw_text);
  }
  return out;
}

std::string build_updater_prompt(const LoggingStatement& statement, const MethodContext& context,
                                 DefectLabel label, const CheckerVerdict& verdict,
                                 const std::vector<LogCentricChange>& exemplars) {
  auto slots = base_slots(statement, context, label);
  std::string notes = verdict.semantic_notes;
  if (!verdict.rationale.empty()) {
    notes = "Rationale: " + verdict.rationale + "\nSemantics: " + verdict.semantic_notes;
  }
  slots["checker_output"] = trim(notes);
  slots["exemplars"] = render_exemplars(exemplars);
  slots["format_instructions"] = std::string(kUpdaterFormat);
  return render_template(embedded_data("updater_prompt.txt"), slots);
}

LoggingStatement parse_updater_reply(std::string_view text, const LoggingStatement& original,
                                     const ParserConfig& config) {
  auto body = text_between(text, "<UPDATED>", "</UPDATED>");
  if (!body) throw Error(ErrorKind::kMalformedReply, "reply has no <UPDATED> block");
  std::string code = trim(*body);
  if (code.rfind("```", 0) == 0) {
    const auto nl = code.find('\n');
    code = nl == std::string::npos ? "" : code.substr(nl + 1);
    const auto fence = code.rfind("```");
    if (fence != std::string::npos) code = code.substr(0, fence);
    code = trim(code);
  }
  auto parsed = parse_statement(code, config);
  if (!parsed) {
    throw Error(ErrorKind::kNotALoggingStatement, "updated text is not a logging call: " + code);
  }
  parsed->location = original.location;
  parsed->method_id = original.method_id;
  parsed->id = statement_id(original.location.path, original.location.start_line,
                            original.location.end_line, parsed->raw_text);
  return *parsed;
}

std::string build_mutator_prompt(const LoggingStatement& statement, const MethodContext& context,
                                 DefectLabel label) {
  auto slots = base_slots(statement, context, label);
  slots["format_instructions"] = std::string(kMutatorFormat);
  return render_template(embedded_data("mutator_prompt.txt"), slots);
}

std::optional<std::string> parse_mutator_reply(std::string_view text) {
  auto body = text_between(text, "<MUTATED>", "</MUTATED>");
  if (!body) return std::nullopt;
  return trim(*body);
}

}  // namespace logfix
