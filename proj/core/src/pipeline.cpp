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

#include "logfix/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "logfix/error.hpp"
#include "logfix/prompts.hpp"

namespace logfix {

namespace {

// One call plus one retry with the same prompt when the reply is malformed.
template <typename Parse>
auto ask(LlmBackend& backend, const std::string& prompt, const PipelineConfig& config,
         UpdateResult& result, Parse parse) -> decltype(parse(std::string())) {
  const double temperature = backend.capabilities().supports_temperature ? 0.0 : 1.0;
  for (int attempt = 0;; ++attempt) {
    ++result.backend_calls;
    const std::string reply = backend.complete(prompt, config.max_output_tokens, temperature);
    try {
      return parse(reply);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kMalformedReply || attempt == 1) throw;
      result.diagnostics.push_back(std::string("retrying: ") + e.what());
    }
  }
}

}  // namespace

void to_json(Json& j, const Detection& d) {
  j = Json{{"context", d.context},
           {"statement", d.statement},
           {"predicted_label", label_name(d.prediction.label)},
           {"probabilities", d.prediction.probabilities}};
}

void from_json(const Json& j, Detection& d) {
  d.context = j.at("context").get<MethodContext>();
  d.statement = j.at("statement").get<LoggingStatement>();
  d.prediction.label = parse_label(j.at("predicted_label").get<std::string>());
  d.prediction.probabilities = j.at("probabilities").get<std::array<double, kNumLabels>>();
}

UpdateResult run_pipeline(const MethodContext& context, const LoggingStatement& stmt,
                          const Prediction& prediction, const ExemplarRetriever* retriever,
                          LlmBackend& backend, const PipelineConfig& config) {
  UpdateResult result;
  result.context = context;
  result.statement = stmt;
  result.predicted_label = prediction.label;
  result.probabilities = prediction.probabilities;
  result.confidence = prediction.probabilities[label_index(prediction.label)];
  result.status = UpdateStatus::kClean;
  if (prediction.label == DefectLabel::kNonDefect) return result;

  try {
    const CheckerVerdict verdict =
        ask(backend, build_checker_prompt(stmt, context, prediction.label), config, result,
            [](const std::string& reply) { return parse_checker_reply(reply); });
    result.checker_confirmed = verdict.confirmed;
    result.checker_rationale = verdict.rationale;
    result.checker_semantics = verdict.semantic_notes;
    if (!verdict.confirmed) {
      result.status = UpdateStatus::kRejected;
      return result;
    }

    if (retriever != nullptr) {
      try {
        result.exemplars = retriever->select(stmt, context.project_id, prediction.label, config.exemplars);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kEmptyPool) throw;
        result.diagnostics.push_back(std::string("no exemplars: ") + e.what());
      }
    }

    const std::string prompt =
        build_updater_prompt(stmt, context, prediction.label, verdict, result.exemplars);
    LoggingStatement updated = ask(backend, prompt, config, result, [&](const std::string& reply) {
      return parse_updater_reply(reply, stmt, config.parser);
    });
    if (updated.arity_mismatch) {
      result.diagnostics.push_back("warning: updated statement has " +
                                   std::to_string(updated.placeholders.size()) + " placeholders for " +
                                   std::to_string(updated.variables.size()) + " variables");
    }
    result.updated_statement = std::move(updated);
    result.status = UpdateStatus::kUpdated;
  } catch (const Error& e) {
    result.status = UpdateStatus::kFailed;
    result.backend_error = e.kind() == ErrorKind::kBackendError;
    result.diagnostics.emplace_back(e.what());
  }
  return result;
}

UpdateResult run_pipeline(const MethodContext& context, const LoggingStatement& stmt,
                          const DetectorModel& detector, const ExemplarRetriever* retriever,
                          LlmBackend& backend, const PipelineConfig& config) {
  return run_pipeline(context, stmt, detector.predict(stmt, context), retriever, backend, config);
}

std::vector<UpdateResult> run_pipeline_batch(const std::vector<PipelineItem>& items,
                                             const std::vector<Prediction>& predictions,
                                             const DetectorModel* detector,
                                             const ExemplarRetriever* retriever, LlmBackend& backend,
                                             const PipelineConfig& config) {
  if (!predictions.empty() && predictions.size() != items.size()) {
    throw Error(ErrorKind::kLengthMismatch, "one prediction per item is required");
  }
  if (predictions.empty() && detector == nullptr) {
    throw Error(ErrorKind::kConfigError, "either predictions or a detector must be given");
  }
  std::vector<UpdateResult> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& item = items[i];
      const Prediction p = predictions.empty() ? detector->predict(item.statement, item.context)
                                               : predictions[i];
      results[i] = run_pipeline(item.context, item.statement, p, retriever, backend, config);
    }
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(config.workers, items.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace logfix
