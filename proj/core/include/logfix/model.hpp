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

// Domain records shared by every stage: parsed logging statements, the
// methods that enclose them, defect labels, mined log-centric changes and the
// per-statement results of the repair pipeline.

#ifndef LOGFIX_MODEL_HPP_
#define LOGFIX_MODEL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logfix {

enum class LogLevel { kTrace, kDebug, kInfo, kWarn, kError, kFatal };

// Case-insensitive. Throws Error(kUnknownLevel) for anything outside the six
// canonical names.
LogLevel parse_level(std::string_view text);
// Canonical uppercase name.
std::string_view level_name(LogLevel level);

enum class PlaceholderKind {
  kBraces,   // SLF4J "{}"
  kPercent,  // printf-style conversion such as "%s" or "%5.2f"
  kConcat,   // synthetic marker for a concatenated expression
};

std::string_view placeholder_kind_name(PlaceholderKind kind);
PlaceholderKind parse_placeholder_kind(std::string_view text);

struct Placeholder {
  PlaceholderKind kind = PlaceholderKind::kBraces;
  // Byte offset of the marker inside LoggingStatement::static_text.
  std::size_t offset = 0;
  // Marker text as it appears in static_text ("{}", "%d", ...).
  std::string marker;

  bool operator==(const Placeholder&) const = default;
};

struct SourceLocation {
  std::string path;
  int start_line = 0;
  int end_line = 0;

  bool operator==(const SourceLocation&) const = default;
};

// A parsed logging call.
//
// static_text keeps string-literal contents exactly as written in source
// (escape sequences are not decoded), so every byte of it maps back onto a
// byte of raw_text. Concatenated expressions appear as "{}" markers with a
// kConcat placeholder.
struct LoggingStatement {
  std::string id;
  LogLevel level = LogLevel::kInfo;
  std::string receiver;
  std::string method;
  std::string static_text;
  std::vector<Placeholder> placeholders;
  std::vector<std::string> variables;
  std::string raw_text;
  SourceLocation location;
  std::string method_id;
  // |placeholders| != |variables|. Defective code is valid input.
  bool arity_mismatch = false;
  // The argument list could not be decomposed; only raw_text is meaningful.
  bool parse_degraded = false;

  bool operator==(const LoggingStatement&) const = default;
};

// True when both statements decompose identically, ignoring identity and
// location fields.
bool same_decomposition(const LoggingStatement& a, const LoggingStatement& b);

struct MethodContext {
  std::string method_id;
  std::string project_id;
  std::string qualified_name;
  std::string source_text;
  std::vector<std::string> statement_ids;
  std::string path;
  int start_line = 0;
  int end_line = 0;

  bool operator==(const MethodContext&) const = default;
};

enum class DefectLabel {
  kNonDefect = 0,
  kStatementCode = 1,
  kStaticDynamic = 2,
  kTemporal = 3,
  kReadability = 4,
};

inline constexpr std::size_t kNumLabels = 5;
inline constexpr std::array<DefectLabel, kNumLabels> kAllLabels = {
    DefectLabel::kNonDefect, DefectLabel::kStatementCode,
    DefectLabel::kStaticDynamic, DefectLabel::kTemporal,
    DefectLabel::kReadability};

inline std::size_t label_index(DefectLabel label) {
  return static_cast<std::size_t>(label);
}
std::string_view label_name(DefectLabel label);
// Throws Error(kDataError) on an unknown name.
DefectLabel parse_label(std::string_view text);

enum class MutationStrategy {
  kTypo,
  kCapitalization,
  kTense,
  kSemanticStatementCode,
  kSemanticStaticDynamic,
};

std::string_view strategy_name(MutationStrategy strategy);
MutationStrategy parse_strategy(std::string_view text);
DefectLabel strategy_label(MutationStrategy strategy);

struct LogCentricChange {
  std::string project_id;
  std::string commit_id;
  LoggingStatement before;
  LoggingStatement after;
  MethodContext context;
  std::optional<DefectLabel> inferred_label;

  bool operator==(const LogCentricChange&) const = default;
};

enum class ProvenanceKind { kWellMaintained, kMutated, kMined };

std::string_view provenance_kind_name(ProvenanceKind kind);

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::kWellMaintained;
  // Set only for kMutated.
  std::optional<MutationStrategy> strategy;
  std::string original_raw_text;

  bool operator==(const Provenance&) const = default;
};

struct LabeledSample {
  MethodContext context;
  LoggingStatement target;
  DefectLabel label = DefectLabel::kNonDefect;
  Provenance provenance;

  bool operator==(const LabeledSample&) const = default;
};

// Lists every violated invariant; an empty result means the sample is valid.
std::vector<std::string> validate_sample(const LabeledSample& sample);

struct EvaluationRecord {
  std::string metric_name;
  double m_origin = 0.0;
  double m_updated = 0.0;
  // Absent when the origin metric is already 1 and the update regressed.
  std::optional<double> ic;

  bool operator==(const EvaluationRecord&) const = default;
};

enum class UpdateStatus {
  kClean,     // detector predicted NON_DEFECT; no backend calls
  kRejected,  // checker denied the detector's verdict
  kUpdated,   // updater produced a parsed replacement statement
  kFailed,    // backend or reply errors after the retry budget
};

std::string_view update_status_name(UpdateStatus status);
UpdateStatus parse_update_status(std::string_view text);

struct UpdateResult {
  MethodContext context;
  LoggingStatement statement;
  DefectLabel predicted_label = DefectLabel::kNonDefect;
  std::array<double, kNumLabels> probabilities{};
  double confidence = 0.0;
  bool checker_confirmed = false;
  std::string checker_rationale;
  std::string checker_semantics;
  std::vector<LogCentricChange> exemplars;
  std::optional<LoggingStatement> updated_statement;
  std::vector<EvaluationRecord> metrics;
  UpdateStatus status = UpdateStatus::kClean;
  int backend_calls = 0;
  bool backend_error = false;
  std::vector<std::string> diagnostics;

  bool operator==(const UpdateResult&) const = default;
};

}  // namespace logfix

#endif  // LOGFIX_MODEL_HPP_
