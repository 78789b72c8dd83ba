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

#include "logfix/evaluation.hpp"

#include <map>

#include "logfix/error.hpp"
#include "logfix/source_parser.hpp"

namespace logfix {

namespace {

Json detection_json(const DetectionReport& d) {
  Json classes = Json::object();
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const auto& s = d.per_class[c];
    classes[std::string(label_name(kAllLabels[c]))] =
        Json{{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}, {"support", s.support}};
  }
  Json confusion = Json::array();
  for (const auto& row : d.confusion) confusion.push_back(row);
  return Json{{"per_class", classes},
              {"f1_macro", d.f1_macro},
              {"accuracy", d.accuracy},
              {"confusion", confusion}};
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

void to_json(Json& j, const TruthRecord& t) {
  j = Json::object();
  if (!t.statement_id.empty()) j["statement_id"] = t.statement_id;
  if (!t.path.empty()) {
    j["path"] = t.path;
    j["line"] = t.line;
  }
  j["label"] = label_name(t.label);
  j["fixed"] = t.fixed ? Json(*t.fixed) : Json(nullptr);
}

void from_json(const Json& j, TruthRecord& t) {
  t.statement_id = j.value("statement_id", std::string());
  t.path = j.value("path", std::string());
  t.line = j.value("line", 0);
  if (t.statement_id.empty() && t.path.empty()) {
    throw Error(ErrorKind::kDataError, "truth record needs statement_id or path and line");
  }
  t.label = parse_label(j.at("label").get<std::string>());
  t.fixed.reset();
  if (!j.contains("fixed") || j["fixed"].is_null()) return;
  if (j["fixed"].is_string()) {
    // Bare source text of the corrected call.
    const auto raw = j["fixed"].get<std::string>();
    t.fixed = parse_statement(raw, ParserConfig{});
    if (!t.fixed) throw Error(ErrorKind::kDataError, "fixed is not a logging call: " + raw);
  } else {
    t.fixed = j["fixed"].get<LoggingStatement>();
  }
}

DefectLabel final_label(const UpdateResult& r) {
  return r.checker_confirmed ? r.predicted_label : DefectLabel::kNonDefect;
}

EvaluationReport evaluate_results(std::vector<UpdateResult>& results,
                                  const std::vector<TruthRecord>& truth) {
  std::map<std::string, const TruthRecord*> by_id;
  std::map<std::pair<std::string, int>, const TruthRecord*> by_location;
  for (const auto& t : truth) {
    if (!t.statement_id.empty()) by_id[t.statement_id] = &t;
    if (!t.path.empty()) by_location[{t.path, t.line}] = &t;
  }

  EvaluationReport report;
  std::vector<DefectLabel> raw;
  std::vector<DefectLabel> checked;
  std::vector<DefectLabel> golds;
  const auto& names = update_metric_names();
  std::vector<double> sum_o(names.size(), 0.0);
  std::vector<double> sum_u(names.size(), 0.0);
  std::vector<double> sum_ic(names.size(), 0.0);
  std::vector<std::size_t> n_ic(names.size(), 0);
  std::size_t n_update = 0;

  for (auto& r : results) {
    const TruthRecord* found = nullptr;
    if (auto it = by_id.find(r.statement.id); it != by_id.end()) {
      found = it->second;
    } else if (auto loc = by_location.find({r.statement.location.path, r.statement.location.start_line});
               loc != by_location.end()) {
      found = loc->second;
    }
    if (found == nullptr) {
      throw Error(ErrorKind::kDataError, "no truth record for statement " + r.statement.id + " at " +
                                             r.statement.location.path + ":" +
                                             std::to_string(r.statement.location.start_line));
    }
    const TruthRecord& t = *found;
    raw.push_back(r.predicted_label);
    checked.push_back(final_label(r));
    golds.push_back(t.label);
    if (r.status == UpdateStatus::kUpdated) ++report.updated;
    if (r.status == UpdateStatus::kRejected) ++report.rejected;
    if (r.status == UpdateStatus::kFailed) ++report.failed;

    r.metrics.clear();
    if (t.label == DefectLabel::kNonDefect || !t.fixed) continue;
    const LoggingStatement& updated = r.updated_statement ? *r.updated_statement : r.statement;
    r.metrics = evaluate_update(r.statement, updated, *t.fixed);
    ++n_update;
    for (std::size_t m = 0; m < names.size(); ++m) {
      sum_o[m] += r.metrics[m].m_origin;
      sum_u[m] += r.metrics[m].m_updated;
      if (r.metrics[m].ic) {
        sum_ic[m] += *r.metrics[m].ic;
        ++n_ic[m];
      }
    }
  }
  report.samples = results.size();
  if (!results.empty()) {
    report.detector = detection_metrics(raw, golds);
    report.after_checker = detection_metrics(checked, golds);
  }
  if (n_update > 0) {
    for (std::size_t m = 0; m < names.size(); ++m) {
      MetricSummary s;
      s.metric_name = names[m];
      s.count = n_update;
      s.mean_origin = sum_o[m] / static_cast<double>(n_update);
      s.mean_updated = sum_u[m] / static_cast<double>(n_update);
      try {
        s.ic_of_means = improvement_coefficient(s.mean_origin, s.mean_updated);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kDegenerateOrigin) throw;
      }
      s.ic_count = n_ic[m];
      if (n_ic[m] > 0) s.mean_of_ic = sum_ic[m] / static_cast<double>(n_ic[m]);
      report.update.push_back(std::move(s));
    }
  }
  return report;
}

Json report_json(const EvaluationReport& report) {
  Json update = Json::array();
  for (const auto& s : report.update) {
    update.push_back(Json{{"metric", s.metric_name},
                          {"count", s.count},
                          {"mean_origin", s.mean_origin},
                          {"mean_updated", s.mean_updated},
                          {"ic", optional_number(s.ic_of_means)},
                          {"mean_of_ic", optional_number(s.mean_of_ic)},
                          {"ic_count", s.ic_count}});
  }
  return Json{{"samples", report.samples},
              {"detection", detection_json(report.detector)},
              {"detection_after_checker", detection_json(report.after_checker)},
              {"status", Json{{"updated", report.updated},
                              {"rejected", report.rejected},
                              {"failed", report.failed}}},
              {"update", update}};
}

}  // namespace logfix
