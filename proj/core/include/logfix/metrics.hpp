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

// Detection scores, n-gram overlap metrics, variable-set agreement and the
// improvement coefficient.

#ifndef LOGFIX_METRICS_HPP_
#define LOGFIX_METRICS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "logfix/model.hpp"

namespace logfix {

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct DetectionReport {
  std::array<ClassScores, kNumLabels> per_class{};
  double f1_macro = 0.0;
  double accuracy = 0.0;
  // confusion[gold][predicted]
  std::array<std::array<std::size_t, kNumLabels>, kNumLabels> confusion{};
};

// Throws Error(kLengthMismatch) when sizes differ or are zero.
DetectionReport detection_metrics(const std::vector<DefectLabel>& preds,
                                  const std::vector<DefectLabel>& golds);

// Lowercased word and punctuation tokens with placeholder markers removed.
std::vector<std::string> static_tokens(std::string_view static_text,
                                       const std::vector<Placeholder>& placeholders = {});

// Sentence BLEU with brevity penalty. An order n > 1 without matches counts
// as 1 / (candidate n-grams + 1); no unigram match scores 0.
// Throws Error(kEmptyReference).
double bleu(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
            int max_n);
// F1 of clipped n-gram overlap. Throws Error(kEmptyReference).
double rouge_n(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
               int n);
// F1 over the longest common subsequence. Throws Error(kEmptyReference).
double rouge_l(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Set agreement after trimming. Both empty scores (1, 1, 1).
Prf variable_prf(const std::vector<std::string>& updated, const std::vector<std::string>& truth);

// (updated - origin) / (1 - origin). Throws Error(kDegenerateOrigin) when
// origin is 1 and updated is below it.
double improvement_coefficient(double m_origin, double m_updated);

// Names of the metrics produced by evaluate_update, in order.
const std::vector<std::string>& update_metric_names();

// Every static-text and variable metric of original and updated against
// truth. A reference without tokens scores 1 against an empty candidate and
// 0 otherwise.
std::vector<EvaluationRecord> evaluate_update(const LoggingStatement& original,
                                              const LoggingStatement& updated,
                                              const LoggingStatement& truth);

}  // namespace logfix

#endif  // LOGFIX_METRICS_HPP_
