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

// Five-class defect detector: a bag-of-tokens encoder shared by the
// statement and its method, a linear head over both encodings, and a
// training loop whose loss adds a cosine alignment term to cross-entropy.

#ifndef LOGFIX_DETECTOR_HPP_
#define LOGFIX_DETECTOR_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "logfix/json_io.hpp"
#include "logfix/metrics.hpp"
#include "logfix/model.hpp"
#include "logfix/tokenizer.hpp"
#include "logfix/util.hpp"

namespace logfix {

struct TrainConfig {
  double learning_rate = 5e-5;  // the scratch encoder usually wants 1e-3 to 1e-2
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  double dropout = 0.1;
  int epochs = 10;
  double alpha = 0.5;
  std::size_t max_tokens = 1024;
  std::size_t batch_size = 32;
  std::size_t embedding_dim = 128;
  std::size_t min_token_count = 2;
  std::uint64_t seed = 42;

  // Throws Error(kConfigError).
  void validate() const;
};

void to_json(Json& j, const TrainConfig& c);
// Unknown keys are rejected.
void from_json(const Json& j, TrainConfig& c);

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Mean-pooled token embeddings followed by tanh(W1 x + b1) and W2 h + b2.
class EncoderModel {
 public:
  EncoderModel() = default;
  EncoderModel(Vocabulary vocab, std::size_t dim, std::uint64_t seed);

  std::size_t dim() const { return static_cast<std::size_t>(w1.rows()); }
  const Vocabulary& vocabulary() const { return vocab; }
  Vector pool(const TokenSequence& seq) const;
  Vector encode(const TokenSequence& seq) const;

  Vocabulary vocab;
  Matrix embeddings;  // D x |V|
  Matrix w1;
  Vector b1;
  Matrix w2;
  Vector b2;
};

struct ClassifierHead {
  ClassifierHead() = default;
  explicit ClassifierHead(std::size_t dim);  // zero weights

  Vector logits(const Vector& statement, const Vector& context) const;

  Matrix weight;  // 5 x 2D
  Vector bias;
};

std::array<double, kNumLabels> softmax(const Vector& logits);
// Highest probability; ties go to the lowest class index.
DefectLabel argmax_label(const std::array<double, kNumLabels>& probs);

inline constexpr double kProbabilityFloor = 1e-12;

struct TrainingBatch {
  std::vector<Vector> statement_vectors;
  std::vector<Vector> context_vectors;
  std::vector<std::array<double, kNumLabels>> targets;  // one-hot
  std::vector<std::array<double, kNumLabels>> probabilities;
};

struct LossValue {
  double value = 0.0;
  double cross_entropy = 0.0;
  double mean_cosine = 0.0;
  std::size_t degenerate_pairs = 0;  // zero-norm vectors scored as cos = 0
};

// CE - alpha * mean cos + alpha. Throws Error(kDataError) when the batch is
// empty or its shapes disagree.
LossValue composite_loss(const TrainingBatch& batch, double alpha);

struct Example {
  TokenSequence statement;
  TokenSequence context;
  DefectLabel label = DefectLabel::kNonDefect;
};

struct Gradients {
  Matrix embeddings;
  Matrix w1;
  Vector b1;
  Matrix w2;
  Vector b2;
  Matrix head_weight;
  Vector head_bias;
};

// Composite loss of a batch under the full model. When grads is non-null
// it receives the exact gradient. Dropout is applied to pooled vectors only
// when dropout_rng is non-null.
LossValue batch_loss(const EncoderModel& encoder, const ClassifierHead& head,
                     const std::vector<const Example*>& batch, double alpha, Gradients* grads,
                     Rng* dropout_rng = nullptr, double dropout = 0.0);

struct Prediction {
  DefectLabel label = DefectLabel::kNonDefect;
  std::array<double, kNumLabels> probabilities{};
};

struct DetectorModel {
  TrainConfig config;
  EncoderModel encoder;
  ClassifierHead head;

  Example example(const LoggingStatement& stmt, const MethodContext& context,
                  DefectLabel label = DefectLabel::kNonDefect) const;
  Prediction predict(const LoggingStatement& stmt, const MethodContext& context) const;
  Prediction predict(const Example& ex) const;

  void save(const std::string& path) const;
  // Throws Error(kDataError) on a malformed checkpoint.
  static DetectorModel load(const std::string& path);
};

Json checkpoint_json(const DetectorModel& model);
DetectorModel checkpoint_from_json(const Json& j);

struct DatasetSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};

// Per class: shuffle, then a tenth each to validation and test, rounded
// down, and the rest to training. Throws Error(kClassUnderflow) when a class
// has fewer than two samples.
DatasetSplit stratified_split(const std::vector<LabeledSample>& corpus, std::uint64_t seed);

struct EpochMetrics {
  int epoch = 0;
  double train_loss = 0.0;
  double validation_f1_macro = 0.0;
  double validation_accuracy = 0.0;
};

struct TrainResult {
  DetectorModel model;  // parameters from the best validation epoch
  std::vector<EpochMetrics> history;
  DatasetSplit split;
  int best_epoch = 0;
  DetectionReport test_report;
};

TrainResult train(const std::vector<LabeledSample>& corpus, const TrainConfig& config);

}  // namespace logfix

#endif  // LOGFIX_DETECTOR_HPP_
