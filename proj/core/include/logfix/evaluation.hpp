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

// Scoring pipeline results against ground truth.

#ifndef LOGFIX_EVALUATION_HPP_
#define LOGFIX_EVALUATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "logfix/json_io.hpp"
#include "logfix/metrics.hpp"
#include "logfix/model.hpp"

namespace logfix {

// One line of a truth file: the gold label of a statement and, for
// defects, the statement as it should read after repair. A record names its
// statement by id, or by path and start line when the id is empty. In JSON,
// "fixed" is either a statement object or the bare source text of the call.
struct TruthRecord {
  std::string statement_id;
  std::string path;
  int line = 0;
  DefectLabel label = DefectLabel::kNonDefect;
  std::optional<LoggingStatement> fixed;
};

void to_json(Json& j, const TruthRecord& t);
void from_json(const Json& j, TruthRecord& t);

struct MetricSummary {
  std::string metric_name;
  std::size_t count = 0;
  double mean_origin = 0.0;
  double mean_updated = 0.0;
  std::optional<double> ic_of_means;
  std::optional<double> mean_of_ic;
  std::size_t ic_count = 0;
};

struct EvaluationReport {
  std::size_t samples = 0;
  DetectionReport detector;       // raw detector labels
  DetectionReport after_checker;  // NON_DEFECT unless the checker confirmed
  std::size_t updated = 0;
  std::size_t rejected = 0;
  std::size_t failed = 0;
  std::vector<MetricSummary> update;
};

// The label a result finally assigns: the prediction when the checker
// confirmed it, NON_DEFECT otherwise.
DefectLabel final_label(const UpdateResult& r);

// Fills each result's metrics for gold defects with a fixed statement.
// Throws Error(kDataError) when a result has no truth record.
EvaluationReport evaluate_results(std::vector<UpdateResult>& results,
                                  const std::vector<TruthRecord>& truth);

Json report_json(const EvaluationReport& report);

}  // namespace logfix

#endif  // LOGFIX_EVALUATION_HPP_
