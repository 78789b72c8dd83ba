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

#include "logfix/json_io.hpp"

#include "logfix/error.hpp"

namespace logfix {

void to_json(Json& j, const Placeholder& p) {
  j = Json{{"kind", placeholder_kind_name(p.kind)},
           {"offset", p.offset},
           {"marker", p.marker}};
}

void from_json(const Json& j, Placeholder& p) {
  p.kind = parse_placeholder_kind(j.at("kind").get<std::string>());
  p.offset = j.at("offset").get<std::size_t>();
  p.marker = j.value("marker", std::string("{}"));
}

void to_json(Json& j, const SourceLocation& l) {
  j = Json{{"path", l.path}, {"start_line", l.start_line}, {"end_line", l.end_line}};
}

void from_json(const Json& j, SourceLocation& l) {
  l.path = j.at("path").get<std::string>();
  l.start_line = j.at("start_line").get<int>();
  l.end_line = j.at("end_line").get<int>();
}

void to_json(Json& j, const LoggingStatement& s) {
  j = Json{{"id", s.id},
           {"level", level_name(s.level)},
           {"receiver", s.receiver},
           {"method", s.method},
           {"static_text", s.static_text},
           {"placeholders", s.placeholders},
           {"variables", s.variables},
           {"raw_text", s.raw_text},
           {"location", s.location},
           {"method_id", s.method_id},
           {"arity_mismatch", s.arity_mismatch},
           {"parse_degraded", s.parse_degraded}};
}

void from_json(const Json& j, LoggingStatement& s) {
  s.id = j.at("id").get<std::string>();
  s.level = parse_level(j.at("level").get<std::string>());
  s.receiver = j.value("receiver", std::string());
  s.method = j.value("method", std::string());
  s.static_text = j.at("static_text").get<std::string>();
  s.placeholders = j.at("placeholders").get<std::vector<Placeholder>>();
  s.variables = j.at("variables").get<std::vector<std::string>>();
  s.raw_text = j.at("raw_text").get<std::string>();
  s.location = j.at("location").get<SourceLocation>();
  s.method_id = j.value("method_id", std::string());
  s.arity_mismatch = j.value("arity_mismatch", s.placeholders.size() != s.variables.size());
  s.parse_degraded = j.value("parse_degraded", false);
}

void to_json(Json& j, const MethodContext& m) {
  j = Json{{"method_id", m.method_id},
           {"project_id", m.project_id},
           {"qualified_name", m.qualified_name},
           {"source_text", m.source_text},
           {"statement_ids", m.statement_ids},
           {"path", m.path},
           {"start_line", m.start_line},
           {"end_line", m.end_line}};
}

void from_json(const Json& j, MethodContext& m) {
  m.method_id = j.at("method_id").get<std::string>();
  m.project_id = j.value("project_id", std::string());
  m.qualified_name = j.at("qualified_name").get<std::string>();
  m.source_text = j.at("source_text").get<std::string>();
  m.statement_ids = j.value("statement_ids", std::vector<std::string>{});
  m.path = j.value("path", std::string());
  m.start_line = j.value("start_line", 0);
  m.end_line = j.value("end_line", 0);
}

void to_json(Json& j, const LogCentricChange& c) {
  j = Json{{"project_id", c.project_id},
           {"commit_id", c.commit_id},
           {"before", c.before},
           {"after", c.after},
           {"context", c.context}};
  j["inferred_label"] =
      c.inferred_label ? Json(label_name(*c.inferred_label)) : Json(nullptr);
}

void from_json(const Json& j, LogCentricChange& c) {
  c.project_id = j.at("project_id").get<std::string>();
  c.commit_id = j.at("commit_id").get<std::string>();
  c.before = j.at("before").get<LoggingStatement>();
  c.after = j.at("after").get<LoggingStatement>();
  c.context = j.at("context").get<MethodContext>();
  c.inferred_label.reset();
  if (j.contains("inferred_label") && !j["inferred_label"].is_null()) {
    c.inferred_label = parse_label(j["inferred_label"].get<std::string>());
  }
}

void to_json(Json& j, const Provenance& p) {
  j = Json{{"kind", provenance_kind_name(p.kind)}};
  if (p.kind == ProvenanceKind::kMutated) {
    j["strategy"] = p.strategy ? Json(strategy_name(*p.strategy)) : Json(nullptr);
    j["original_raw_text"] = p.original_raw_text;
  }
}

void from_json(const Json& j, Provenance& p) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "WELL_MAINTAINED") {
    p.kind = ProvenanceKind::kWellMaintained;
  } else if (kind == "MUTATED") {
    p.kind = ProvenanceKind::kMutated;
  } else if (kind == "MINED") {
    p.kind = ProvenanceKind::kMined;
  } else {
    throw Error(ErrorKind::kDataError, "unknown provenance kind '" + kind + "'");
  }
  p.strategy.reset();
  if (j.contains("strategy") && !j["strategy"].is_null()) {
    p.strategy = parse_strategy(j["strategy"].get<std::string>());
  }
  p.original_raw_text = j.value("original_raw_text", std::string());
}

void to_json(Json& j, const LabeledSample& s) {
  j = Json{{"context", s.context},
           {"target", s.target},
           {"label", label_name(s.label)},
           {"provenance", s.provenance}};
}

void from_json(const Json& j, LabeledSample& s) {
  s.context = j.at("context").get<MethodContext>();
  s.target = j.at("target").get<LoggingStatement>();
  s.label = parse_label(j.at("label").get<std::string>());
  s.provenance = j.contains("provenance") ? j["provenance"].get<Provenance>() : Provenance{};
}

void to_json(Json& j, const EvaluationRecord& r) {
  j = Json{{"metric_name", r.metric_name}, {"m_origin", r.m_origin}, {"m_updated", r.m_updated}};
  j["ic"] = r.ic ? Json(*r.ic) : Json(nullptr);
}

void from_json(const Json& j, EvaluationRecord& r) {
  r.metric_name = j.at("metric_name").get<std::string>();
  r.m_origin = j.at("m_origin").get<double>();
  r.m_updated = j.at("m_updated").get<double>();
  r.ic.reset();
  if (j.contains("ic") && !j["ic"].is_null()) r.ic = j["ic"].get<double>();
}

void to_json(Json& j, const UpdateResult& r) {
  j = Json{{"context", r.context},
           {"statement", r.statement},
           {"predicted_label", label_name(r.predicted_label)},
           {"probabilities", r.probabilities},
           {"confidence", r.confidence},
           {"checker_confirmed", r.checker_confirmed},
           {"checker_rationale", r.checker_rationale},
           {"checker_semantics", r.checker_semantics},
           {"exemplars", r.exemplars}};
  j["updated_statement"] = r.updated_statement ? Json(*r.updated_statement) : Json(nullptr);
  j["metrics"] = r.metrics;
  j["status"] = update_status_name(r.status);
  j["backend_calls"] = r.backend_calls;
  j["backend_error"] = r.backend_error;
  j["diagnostics"] = r.diagnostics;
}

void from_json(const Json& j, UpdateResult& r) {
  r.context = j.at("context").get<MethodContext>();
  r.statement = j.at("statement").get<LoggingStatement>();
  r.predicted_label = parse_label(j.at("predicted_label").get<std::string>());
  r.probabilities = j.at("probabilities").get<std::array<double, kNumLabels>>();
  r.confidence = j.value("confidence", 0.0);
  r.checker_confirmed = j.value("checker_confirmed", false);
  r.checker_rationale = j.value("checker_rationale", std::string());
  r.checker_semantics = j.value("checker_semantics", std::string());
  r.exemplars = j.value("exemplars", std::vector<LogCentricChange>{});
  r.updated_statement.reset();
  if (j.contains("updated_statement") && !j["updated_statement"].is_null()) {
    r.updated_statement = j["updated_statement"].get<LoggingStatement>();
  }
  r.metrics = j.value("metrics", std::vector<EvaluationRecord>{});
  r.status = parse_update_status(j.value("status", std::string("CLEAN")));
  r.backend_calls = j.value("backend_calls", 0);
  r.backend_error = j.value("backend_error", false);
  r.diagnostics = j.value("diagnostics", std::vector<std::string>{});
}

void to_json(Json& j, const MethodWithStatements& m) {
  j = Json{{"context", m.context}, {"statements", m.statements}};
}

void from_json(const Json& j, MethodWithStatements& m) {
  m.context = j.at("context").get<MethodContext>();
  m.statements = j.at("statements").get<std::vector<LoggingStatement>>();
}

void for_each_jsonl(const std::string& path, const std::function<void(const Json&)>& fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kDataError, "cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json value;
    try {
      value = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::kDataError,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    try {
      fn(value);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::kDataError,
                  path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

JsonlWriter::JsonlWriter(const std::string& path)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw Error(ErrorKind::kDataError, "cannot write " + path);
}

void JsonlWriter::write(const Json& value) {
  out_ << value.dump() << '\n';
  if (!out_) throw Error(ErrorKind::kDataError, "write failed: " + path_);
}

}  // namespace logfix
