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

// Detect, check and update: the per-statement repair flow and a worker pool
// that runs it over many statements.

#ifndef LOGFIX_PIPELINE_HPP_
#define LOGFIX_PIPELINE_HPP_

#include <cstddef>
#include <vector>

#include "logfix/detector.hpp"
#include "logfix/llm.hpp"
#include "logfix/model.hpp"
#include "logfix/retrieval.hpp"
#include "logfix/source_parser.hpp"

namespace logfix {

struct PipelineConfig {
  std::size_t exemplars = 3;
  int max_output_tokens = 512;
  std::size_t workers = 4;
  ParserConfig parser;
};

// One line of a detections file.
struct Detection {
  MethodContext context;
  LoggingStatement statement;
  Prediction prediction;
};

void to_json(Json& j, const Detection& d);
void from_json(const Json& j, Detection& d);

struct PipelineItem {
  MethodContext context;
  LoggingStatement statement;
};

// Runs checker and updater for an existing prediction. Never throws for
// backend or reply failures; they end up in the result's diagnostics.
UpdateResult run_pipeline(const MethodContext& context, const LoggingStatement& stmt,
                          const Prediction& prediction, const ExemplarRetriever* retriever,
                          LlmBackend& backend, const PipelineConfig& config);

UpdateResult run_pipeline(const MethodContext& context, const LoggingStatement& stmt,
                          const DetectorModel& detector, const ExemplarRetriever* retriever,
                          LlmBackend& backend, const PipelineConfig& config);

// Results in input order. predictions, when non-empty, must match items.
std::vector<UpdateResult> run_pipeline_batch(const std::vector<PipelineItem>& items,
                                             const std::vector<Prediction>& predictions,
                                             const DetectorModel* detector,
                                             const ExemplarRetriever* retriever, LlmBackend& backend,
                                             const PipelineConfig& config);

}  // namespace logfix

#endif  // LOGFIX_PIPELINE_HPP_
