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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace logfix {
namespace {

using testing::stmt;

UpdateResult result(const std::string& raw, const std::string& path, int line, DefectLabel predicted,
                    bool confirmed, const std::optional<std::string>& updated = std::nullopt) {
  UpdateResult r;
  r.statement = stmt(raw);
  r.statement.location = {path, line, line};
  r.statement.id = statement_id(path, line, line, raw);
  r.predicted_label = predicted;
  r.checker_confirmed = confirmed;
  if (updated) {
    r.updated_statement = stmt(*updated);
    r.status = UpdateStatus::kUpdated;
  } else if (predicted != DefectLabel::kNonDefect) {
    r.status = confirmed ? UpdateStatus::kFailed : UpdateStatus::kRejected;
  }
  return r;
}

TEST(FinalLabelTest, CheckerGatesPrediction) {
  EXPECT_EQ(final_label(result("log.info(\"x\");", "A", 1, DefectLabel::kTemporal, true)), DefectLabel::kTemporal);
  EXPECT_EQ(final_label(result("log.info(\"x\");", "A", 1, DefectLabel::kTemporal, false)), DefectLabel::kNonDefect);
}

TEST(TruthRecordTest, JsonFormsAndValidation) {
  const auto a = Json::parse(R"({"path": "A.java", "line": 3, "label": "TEMPORAL",
                                 "fixed": "log.info(\"Started\");"})").get<TruthRecord>();
  ASSERT_TRUE(a.fixed);
  EXPECT_EQ(a.fixed->static_text, "Started");
  EXPECT_EQ(a.label, DefectLabel::kTemporal);
  const auto b = Json(a).get<TruthRecord>();
  EXPECT_EQ(b.fixed->raw_text, a.fixed->raw_text);
  EXPECT_EQ(b.line, 3);
  EXPECT_LOGFIX_ERROR(Json::parse(R"({"label": "TEMPORAL"})").get<TruthRecord>(), kDataError);
  EXPECT_LOGFIX_ERROR(Json::parse(R"({"path": "A", "label": "TEMPORAL", "fixed": "x = 1;"})").get<TruthRecord>(),
                      kDataError);
}

TEST(EvaluateResultsTest, CountsDetectionAndUpdateBlocks) {
  std::vector<UpdateResult> results = {
      result("log.info(\"Starting receiver thread\");", "A", 1, DefectLabel::kTemporal, true,
             "log.info(\"Started receiver thread\");"),
      result("log.info(\"Recieved {}\", m);", "A", 2, DefectLabel::kReadability, false),
      result("log.info(\"fine\");", "A", 3, DefectLabel::kNonDefect, false),
      result("log.info(\"Order {} created\", id);", "A", 4, DefectLabel::kStatementCode, true)};
  std::vector<TruthRecord> truth(4);
  truth[0] = {"", "A", 1, DefectLabel::kTemporal, stmt("log.info(\"Started receiver thread\");")};
  truth[1] = {"", "A", 2, DefectLabel::kReadability, stmt("log.info(\"Received {}\", m);")};
  truth[2] = {results[2].statement.id, "", 0, DefectLabel::kNonDefect, std::nullopt};
  truth[3] = {"", "A", 4, DefectLabel::kStatementCode, stmt("log.info(\"Order {} cancelled\", id);")};

  const auto report = evaluate_results(results, truth);
  EXPECT_EQ(report.samples, 4u);
  EXPECT_EQ(report.updated, 1u);
  EXPECT_EQ(report.rejected, 1u);
  EXPECT_EQ(report.failed, 1u);
  EXPECT_DOUBLE_EQ(report.detector.accuracy, 1.0);
  EXPECT_DOUBLE_EQ(report.after_checker.accuracy, 0.75);

  EXPECT_EQ(results[0].metrics.size(), update_metric_names().size());
  EXPECT_TRUE(results[2].metrics.empty());
  ASSERT_EQ(report.update.size(), update_metric_names().size());
  const auto& rouge_l = report.update[5];
  EXPECT_EQ(rouge_l.metric_name, "ROUGE-L");
  EXPECT_EQ(rouge_l.count, 3u);
  double sum_o = 0;
  double sum_u = 0;
  double sum_ic = 0;
  for (std::size_t i : {0u, 1u, 3u}) {
    sum_o += results[i].metrics[5].m_origin;
    sum_u += results[i].metrics[5].m_updated;
    sum_ic += *results[i].metrics[5].ic;
  }
  EXPECT_NEAR(rouge_l.mean_origin, sum_o / 3, 1e-12);
  EXPECT_NEAR(rouge_l.mean_updated, sum_u / 3, 1e-12);
  EXPECT_NEAR(*rouge_l.ic_of_means, (sum_u - sum_o) / (3 - sum_o), 1e-12);
  EXPECT_NEAR(*rouge_l.mean_of_ic, sum_ic / 3, 1e-12);
  // Unchanged statements contribute IC 0; the single repair contributes 1.
  EXPECT_NEAR(*rouge_l.mean_of_ic, 1.0 / 3.0, 1e-12);

  const Json j = report_json(report);
  EXPECT_EQ(j.at("samples"), 4);
  EXPECT_EQ(j.at("status").at("updated"), 1);
  EXPECT_EQ(j.at("update").size(), update_metric_names().size());
  EXPECT_TRUE(j.at("detection").contains("f1_macro"));
}

TEST(EvaluateResultsTest, MissingTruthIsDataError) {
  std::vector<UpdateResult> results = {result("log.info(\"x\");", "A", 1, DefectLabel::kNonDefect, false)};
  EXPECT_LOGFIX_ERROR(evaluate_results(results, {}), kDataError);
}

}  // namespace
}  // namespace logfix
