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

#include "logfix/model.hpp"

#include <algorithm>

#include "logfix/error.hpp"
#include "logfix/util.hpp"

namespace logfix {

namespace {

template <typename Enum, std::size_t N>
Enum lookup_name(std::string_view text,
                 const std::array<std::pair<std::string_view, Enum>, N>& table,
                 ErrorKind error, std::string_view what) {
  const std::string upper = to_upper(trim(text));
  for (const auto& [name, value] : table) {
    if (name == upper) return value;
  }
  throw Error(error, "unknown " + std::string(what) + " '" + std::string(text) + "'");
}

constexpr std::array<std::pair<std::string_view, LogLevel>, 6> kLevels = {{
    {"TRACE", LogLevel::kTrace},
    {"DEBUG", LogLevel::kDebug},
    {"INFO", LogLevel::kInfo},
    {"WARN", LogLevel::kWarn},
    {"ERROR", LogLevel::kError},
    {"FATAL", LogLevel::kFatal},
}};

constexpr std::array<std::pair<std::string_view, DefectLabel>, 5> kLabels = {{
    {"NON_DEFECT", DefectLabel::kNonDefect},
    {"STATEMENT_CODE", DefectLabel::kStatementCode},
    {"STATIC_DYNAMIC", DefectLabel::kStaticDynamic},
    {"TEMPORAL", DefectLabel::kTemporal},
    {"READABILITY", DefectLabel::kReadability},
}};

constexpr std::array<std::pair<std::string_view, MutationStrategy>, 5>
    kStrategies = {{
        {"TYPO", MutationStrategy::kTypo},
        {"CAPITALIZATION", MutationStrategy::kCapitalization},
        {"TENSE", MutationStrategy::kTense},
        {"SEMANTIC_STATEMENT_CODE", MutationStrategy::kSemanticStatementCode},
        {"SEMANTIC_STATIC_DYNAMIC", MutationStrategy::kSemanticStaticDynamic},
    }};

constexpr std::array<std::pair<std::string_view, PlaceholderKind>, 3>
    kPlaceholderKinds = {{
        {"BRACES", PlaceholderKind::kBraces},
        {"PERCENT", PlaceholderKind::kPercent},
        {"CONCAT", PlaceholderKind::kConcat},
    }};

constexpr std::array<std::pair<std::string_view, UpdateStatus>, 4> kStatuses = {{
    {"CLEAN", UpdateStatus::kClean},
    {"REJECTED", UpdateStatus::kRejected},
    {"UPDATED", UpdateStatus::kUpdated},
    {"FAILED", UpdateStatus::kFailed},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(Enum value,
                         const std::array<std::pair<std::string_view, Enum>, N>& table) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  return "?";
}

}  // namespace

LogLevel parse_level(std::string_view text) {
  if (trim(text).empty()) throw Error(ErrorKind::kUnknownLevel, "empty level name");
  return lookup_name(text, kLevels, ErrorKind::kUnknownLevel, "log level");
}

std::string_view level_name(LogLevel level) { return name_of(level, kLevels); }

std::string_view placeholder_kind_name(PlaceholderKind kind) {
  return name_of(kind, kPlaceholderKinds);
}

PlaceholderKind parse_placeholder_kind(std::string_view text) {
  return lookup_name(text, kPlaceholderKinds, ErrorKind::kDataError, "placeholder kind");
}

std::string_view label_name(DefectLabel label) { return name_of(label, kLabels); }

DefectLabel parse_label(std::string_view text) {
  return lookup_name(text, kLabels, ErrorKind::kDataError, "defect label");
}

std::string_view strategy_name(MutationStrategy strategy) {
  return name_of(strategy, kStrategies);
}

MutationStrategy parse_strategy(std::string_view text) {
  return lookup_name(text, kStrategies, ErrorKind::kDataError, "mutation strategy");
}

DefectLabel strategy_label(MutationStrategy strategy) {
  switch (strategy) {
    case MutationStrategy::kTypo:
    case MutationStrategy::kCapitalization:
      return DefectLabel::kReadability;
    case MutationStrategy::kTense:
      return DefectLabel::kTemporal;
    case MutationStrategy::kSemanticStatementCode:
      return DefectLabel::kStatementCode;
    case MutationStrategy::kSemanticStaticDynamic:
      return DefectLabel::kStaticDynamic;
  }
  return DefectLabel::kNonDefect;
}

std::string_view provenance_kind_name(ProvenanceKind kind) {
  switch (kind) {
    case ProvenanceKind::kWellMaintained: return "WELL_MAINTAINED";
    case ProvenanceKind::kMutated: return "MUTATED";
    case ProvenanceKind::kMined: return "MINED";
  }
  return "?";
}

std::string_view update_status_name(UpdateStatus status) {
  return name_of(status, kStatuses);
}

UpdateStatus parse_update_status(std::string_view text) {
  return lookup_name(text, kStatuses, ErrorKind::kDataError, "update status");
}

bool same_decomposition(const LoggingStatement& a, const LoggingStatement& b) {
  return a.level == b.level && a.receiver == b.receiver && a.method == b.method &&
         a.static_text == b.static_text && a.placeholders == b.placeholders &&
         a.variables == b.variables && a.raw_text == b.raw_text &&
         a.arity_mismatch == b.arity_mismatch && a.parse_degraded == b.parse_degraded;
}

std::vector<std::string> validate_sample(const LabeledSample& s) {
  std::vector<std::string> violations;
  const auto& p = s.provenance;
  if (p.kind == ProvenanceKind::kMutated) {
    if (s.label == DefectLabel::kNonDefect) {
      violations.emplace_back("mutated sample labeled clean");
    }
    if (p.original_raw_text == s.target.raw_text) {
      violations.emplace_back("mutated text identical to original");
    }
    if (p.strategy && strategy_label(*p.strategy) != s.label) {
      violations.emplace_back("label does not match mutation strategy");
    }
  }
  if (p.kind == ProvenanceKind::kWellMaintained && s.label != DefectLabel::kNonDefect) {
    violations.emplace_back("well-maintained sample labeled defective");
  }

  const auto& loc = s.target.location;
  const bool path_ok = s.context.path.empty() || loc.path.empty() || loc.path == s.context.path;
  if (!path_ok || loc.start_line < s.context.start_line ||
      loc.end_line > s.context.end_line || loc.start_line > loc.end_line) {
    violations.emplace_back("location outside method");
  }
  if (!s.context.statement_ids.empty() &&
      std::find(s.context.statement_ids.begin(), s.context.statement_ids.end(),
                s.target.id) == s.context.statement_ids.end()) {
    violations.emplace_back("statement not listed in its method");
  }
  if (!s.target.parse_degraded &&
      s.target.arity_mismatch !=
          (s.target.placeholders.size() != s.target.variables.size())) {
    violations.emplace_back("arity flag inconsistent with placeholders");
  }
  if (!std::is_sorted(s.target.placeholders.begin(), s.target.placeholders.end(),
                      [](const Placeholder& a, const Placeholder& b) {
                        return a.offset < b.offset;
                      })) {
    violations.emplace_back("placeholders out of order");
  }
  return violations;
}

}  // namespace logfix
