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

#include "logfix/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "logfix/error.hpp"

namespace logfix {

namespace {

struct EncoderCache {
  const TokenSequence* seq = nullptr;
  Vector mask;  // empty when dropout is off
  Vector x;
  Vector h;
  Vector out;
};

void encoder_forward(const EncoderModel& enc, const TokenSequence& seq, Rng* rng, double dropout,
                     EncoderCache& cache) {
  cache.seq = &seq;
  cache.x = enc.pool(seq);
  cache.mask.resize(0);
  if (rng != nullptr && dropout > 0.0) {
    cache.mask.resize(cache.x.size());
    const double keep = 1.0 / (1.0 - dropout);
    for (Eigen::Index i = 0; i < cache.mask.size(); ++i) {
      cache.mask[i] = rng->uniform() < dropout ? 0.0 : keep;
    }
    cache.x = cache.x.cwiseProduct(cache.mask);
  }
  cache.h = (enc.w1 * cache.x + enc.b1).array().tanh().matrix();
  cache.out = enc.w2 * cache.h + enc.b2;
}

void encoder_backward(const EncoderModel& enc, const EncoderCache& cache, const Vector& dout,
                      Gradients& g) {
  g.w2.noalias() += dout * cache.h.transpose();
  g.b2 += dout;
  const Vector da = (enc.w2.transpose() * dout).cwiseProduct(
      (1.0 - cache.h.array().square()).matrix());
  g.w1.noalias() += da * cache.x.transpose();
  g.b1 += da;
  Vector dx = enc.w1.transpose() * da;
  if (cache.mask.size() > 0) dx = dx.cwiseProduct(cache.mask);
  const auto& tokens = cache.seq->tokens;
  if (tokens.empty()) return;
  dx /= static_cast<double>(tokens.size());
  for (int t : tokens) g.embeddings.col(t) += dx;
}

Gradients zero_gradients(const EncoderModel& enc, const ClassifierHead& head) {
  Gradients g;
  g.embeddings = Matrix::Zero(enc.embeddings.rows(), enc.embeddings.cols());
  g.w1 = Matrix::Zero(enc.w1.rows(), enc.w1.cols());
  g.b1 = Vector::Zero(enc.b1.size());
  g.w2 = Matrix::Zero(enc.w2.rows(), enc.w2.cols());
  g.b2 = Vector::Zero(enc.b2.size());
  g.head_weight = Matrix::Zero(head.weight.rows(), head.weight.cols());
  g.head_bias = Vector::Zero(head.bias.size());
  return g;
}

std::array<double, kNumLabels> one_hot(DefectLabel label) {
  std::array<double, kNumLabels> y{};
  y[label_index(label)] = 1.0;
  return y;
}

template <typename T>
struct AdamSlot {
  T m;
  T v;
};

template <typename T>
void adam_update(T& param, const T& grad, AdamSlot<T>& slot, const TrainConfig& c, long step) {
  if (slot.m.size() == 0) {
    slot.m = T::Zero(param.rows(), param.cols());
    slot.v = T::Zero(param.rows(), param.cols());
  }
  slot.m = c.adam_beta1 * slot.m + (1.0 - c.adam_beta1) * grad;
  slot.v = c.adam_beta2 * slot.v + (1.0 - c.adam_beta2) * grad.cwiseProduct(grad);
  const double c1 = 1.0 - std::pow(c.adam_beta1, static_cast<double>(step));
  const double c2 = 1.0 - std::pow(c.adam_beta2, static_cast<double>(step));
  param.array() -= c.learning_rate * (slot.m.array() / c1) /
                   ((slot.v.array() / c2).sqrt() + c.adam_epsilon);
}

Json tensor_json(const Matrix& m) {
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix tensor_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto& data = j.at("data");
  if (rows < 0 || cols < 0 || data.size() != static_cast<std::size_t>(rows * cols)) {
    throw Error(ErrorKind::kDataError, "tensor shape does not match its data");
  }
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double v = data[k++].get<double>();
      if (!std::isfinite(v)) throw Error(ErrorKind::kDataError, "non-finite parameter");
      m(r, c) = v;
    }
  }
  return m;
}

}  // namespace

void TrainConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::kConfigError, what); };
  if (!(learning_rate > 0.0)) fail("learning_rate must be positive");
  if (!(adam_epsilon > 0.0)) fail("adam_epsilon must be positive");
  if (!(adam_beta1 >= 0.0 && adam_beta1 < 1.0) || !(adam_beta2 >= 0.0 && adam_beta2 < 1.0)) {
    fail("adam betas must lie in [0, 1)");
  }
  if (!(dropout >= 0.0 && dropout < 1.0)) fail("dropout must lie in [0, 1)");
  if (epochs < 1) fail("epochs must be at least 1");
  if (!(alpha >= 0.0)) fail("alpha must be non-negative");
  if (max_tokens == 0) fail("max_tokens must be positive");
  if (batch_size == 0) fail("batch_size must be positive");
  if (embedding_dim == 0) fail("embedding_dim must be positive");
}

void to_json(Json& j, const TrainConfig& c) {
  j = Json{{"learning_rate", c.learning_rate}, {"adam_beta1", c.adam_beta1},
           {"adam_beta2", c.adam_beta2},       {"adam_epsilon", c.adam_epsilon},
           {"dropout", c.dropout},             {"epochs", c.epochs},
           {"alpha", c.alpha},                 {"max_tokens", c.max_tokens},
           {"batch_size", c.batch_size},       {"embedding_dim", c.embedding_dim},
           {"min_token_count", c.min_token_count}, {"seed", c.seed}};
}

void from_json(const Json& j, TrainConfig& c) {
  if (!j.is_object()) throw Error(ErrorKind::kConfigError, "train config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "learning_rate") c.learning_rate = value.get<double>();
    else if (key == "adam_beta1") c.adam_beta1 = value.get<double>();
    else if (key == "adam_beta2") c.adam_beta2 = value.get<double>();
    else if (key == "adam_epsilon") c.adam_epsilon = value.get<double>();
    else if (key == "dropout") c.dropout = value.get<double>();
    else if (key == "epochs") c.epochs = value.get<int>();
    else if (key == "alpha") c.alpha = value.get<double>();
    else if (key == "max_tokens") c.max_tokens = value.get<std::size_t>();
    else if (key == "batch_size") c.batch_size = value.get<std::size_t>();
    else if (key == "embedding_dim") c.embedding_dim = value.get<std::size_t>();
    else if (key == "min_token_count") c.min_token_count = value.get<std::size_t>();
    else if (key == "seed") c.seed = value.get<std::uint64_t>();
    else throw Error(ErrorKind::kConfigError, "unknown train key '" + key + "'");
  }
}

EncoderModel::EncoderModel(Vocabulary v, std::size_t dim, std::uint64_t seed) : vocab(std::move(v)) {
  if (dim == 0) throw Error(ErrorKind::kConfigError, "encoder width must be positive");
  const auto d = static_cast<Eigen::Index>(dim);
  const auto n = static_cast<Eigen::Index>(vocab.size());
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  embeddings.resize(d, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) embeddings(r, c) = rng.normal(0.0, 1.0);
  }
  w1.resize(d, d);
  w2.resize(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) w1(r, c) = rng.normal(0.0, scale);
  }
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) w2(r, c) = rng.normal(0.0, scale);
  }
  b1 = Vector::Zero(d);
  b2 = Vector::Zero(d);
}

Vector EncoderModel::pool(const TokenSequence& seq) const {
  Vector x = Vector::Zero(w1.cols());
  if (seq.tokens.empty()) return x;
  for (int t : seq.tokens) x += embeddings.col(t);
  return x / static_cast<double>(seq.tokens.size());
}

Vector EncoderModel::encode(const TokenSequence& seq) const {
  const Vector h = (w1 * pool(seq) + b1).array().tanh().matrix();
  return w2 * h + b2;
}

ClassifierHead::ClassifierHead(std::size_t dim)
    : weight(Matrix::Zero(static_cast<Eigen::Index>(kNumLabels), static_cast<Eigen::Index>(2 * dim))),
      bias(Vector::Zero(static_cast<Eigen::Index>(kNumLabels))) {}

Vector ClassifierHead::logits(const Vector& statement, const Vector& context) const {
  const Eigen::Index d = statement.size();
  return weight.leftCols(d) * statement + weight.rightCols(context.size()) * context + bias;
}

std::array<double, kNumLabels> softmax(const Vector& logits) {
  std::array<double, kNumLabels> p{};
  const double top = logits.maxCoeff();
  double sum = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    p[c] = std::exp(logits[static_cast<Eigen::Index>(c)] - top);
    sum += p[c];
  }
  for (auto& v : p) v /= sum;
  return p;
}

DefectLabel argmax_label(const std::array<double, kNumLabels>& probs) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < kNumLabels; ++c) {
    if (probs[c] > probs[best]) best = c;
  }
  return kAllLabels[best];
}

LossValue composite_loss(const TrainingBatch& batch, double alpha) {
  const std::size_t n = batch.targets.size();
  if (n == 0 || batch.probabilities.size() != n || batch.statement_vectors.size() != n ||
      batch.context_vectors.size() != n) {
    throw Error(ErrorKind::kDataError, "empty or ragged training batch");
  }
  LossValue out;
  double ce = 0.0;
  double cos_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      if (batch.targets[i][c] != 0.0) {
        ce -= batch.targets[i][c] * std::log(std::max(batch.probabilities[i][c], kProbabilityFloor));
      }
    }
    const Vector& l = batch.statement_vectors[i];
    const Vector& s = batch.context_vectors[i];
    if (l.size() != s.size()) throw Error(ErrorKind::kDataError, "vector widths differ");
    const double nl = l.norm();
    const double ns = s.norm();
    if (nl == 0.0 || ns == 0.0) {
      ++out.degenerate_pairs;
    } else {
      cos_sum += l.dot(s) / (nl * ns);
    }
  }
  out.cross_entropy = ce / static_cast<double>(n);
  out.mean_cosine = cos_sum / static_cast<double>(n);
  out.value = out.cross_entropy - alpha * out.mean_cosine + alpha;
  return out;
}

LossValue batch_loss(const EncoderModel& encoder, const ClassifierHead& head,
                     const std::vector<const Example*>& batch, double alpha, Gradients* grads,
                     Rng* dropout_rng, double dropout) {
  const std::size_t n = batch.size();
  std::vector<EncoderCache> stmt(n);
  std::vector<EncoderCache> ctx(n);
  TrainingBatch tb;
  for (std::size_t i = 0; i < n; ++i) {
    encoder_forward(encoder, batch[i]->statement, dropout_rng, dropout, stmt[i]);
    encoder_forward(encoder, batch[i]->context, dropout_rng, dropout, ctx[i]);
    tb.statement_vectors.push_back(stmt[i].out);
    tb.context_vectors.push_back(ctx[i].out);
    tb.targets.push_back(one_hot(batch[i]->label));
    tb.probabilities.push_back(softmax(head.logits(stmt[i].out, ctx[i].out)));
  }
  const LossValue loss = composite_loss(tb, alpha);
  if (grads == nullptr) return loss;

  *grads = zero_gradients(encoder, head);
  const double inv_n = 1.0 / static_cast<double>(n);
  const Eigen::Index d = static_cast<Eigen::Index>(encoder.dim());
  for (std::size_t i = 0; i < n; ++i) {
    Vector dz(static_cast<Eigen::Index>(kNumLabels));
    const std::size_t y = label_index(batch[i]->label);
    const bool floored = tb.probabilities[i][y] < kProbabilityFloor;
    for (std::size_t c = 0; c < kNumLabels; ++c) {
      dz[static_cast<Eigen::Index>(c)] =
          floored ? 0.0 : (tb.probabilities[i][c] - (c == y ? 1.0 : 0.0)) * inv_n;
    }
    const Vector& l = tb.statement_vectors[i];
    const Vector& s = tb.context_vectors[i];
    Vector cat(2 * d);
    cat << l, s;
    grads->head_weight.noalias() += dz * cat.transpose();
    grads->head_bias += dz;
    const Vector dcat = head.weight.transpose() * dz;
    Vector dl = dcat.head(d);
    Vector ds = dcat.tail(d);

    const double nl = l.norm();
    const double ns = s.norm();
    if (nl > 0.0 && ns > 0.0 && alpha != 0.0) {
      const double cosv = l.dot(s) / (nl * ns);
      const double k = -alpha * inv_n;
      dl += k * (s / (nl * ns) - cosv * l / (nl * nl));
      ds += k * (l / (nl * ns) - cosv * s / (ns * ns));
    }
    encoder_backward(encoder, stmt[i], dl, *grads);
    encoder_backward(encoder, ctx[i], ds, *grads);
  }
  return loss;
}

Example DetectorModel::example(const LoggingStatement& stmt, const MethodContext& context,
                               DefectLabel label) const {
  Example ex;
  ex.statement = tokenize(stmt.raw_text, encoder.vocab, config.max_tokens);
  ex.context = tokenize(context.source_text, encoder.vocab, config.max_tokens);
  ex.label = label;
  return ex;
}

Prediction DetectorModel::predict(const Example& ex) const {
  Prediction p;
  p.probabilities = softmax(head.logits(encoder.encode(ex.statement), encoder.encode(ex.context)));
  p.label = argmax_label(p.probabilities);
  return p;
}

Prediction DetectorModel::predict(const LoggingStatement& stmt, const MethodContext& context) const {
  return predict(example(stmt, context));
}

Json checkpoint_json(const DetectorModel& model) {
  Json j;
  j["format"] = "logfix-detector";
  j["version"] = 1;
  j["config"] = model.config;
  j["vocabulary"] = model.encoder.vocab.known();
  j["oov_buckets"] = Vocabulary::kOovBuckets;
  j["tensors"] = Json{{"embeddings", tensor_json(model.encoder.embeddings)},
                      {"w1", tensor_json(model.encoder.w1)},
                      {"b1", tensor_json(model.encoder.b1)},
                      {"w2", tensor_json(model.encoder.w2)},
                      {"b2", tensor_json(model.encoder.b2)},
                      {"head_weight", tensor_json(model.head.weight)},
                      {"head_bias", tensor_json(model.head.bias)}};
  return j;
}

DetectorModel checkpoint_from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != "logfix-detector" || j.at("version").get<int>() != 1) {
      throw Error(ErrorKind::kDataError, "not a version 1 detector checkpoint");
    }
    if (j.at("oov_buckets").get<int>() != Vocabulary::kOovBuckets) {
      throw Error(ErrorKind::kDataError, "checkpoint uses a different bucket count");
    }
    DetectorModel m;
    m.config = j.at("config").get<TrainConfig>();
    m.encoder.vocab = Vocabulary(j.at("vocabulary").get<std::vector<std::string>>());
    const auto& t = j.at("tensors");
    m.encoder.embeddings = tensor_from_json(t.at("embeddings"));
    m.encoder.w1 = tensor_from_json(t.at("w1"));
    m.encoder.b1 = tensor_from_json(t.at("b1"));
    m.encoder.w2 = tensor_from_json(t.at("w2"));
    m.encoder.b2 = tensor_from_json(t.at("b2"));
    m.head.weight = tensor_from_json(t.at("head_weight"));
    m.head.bias = tensor_from_json(t.at("head_bias"));
    const Eigen::Index d = m.encoder.w1.rows();
    const bool ok = d > 0 && m.encoder.w1.cols() == d && m.encoder.b1.size() == d &&
                    m.encoder.w2.rows() == d && m.encoder.w2.cols() == d && m.encoder.b2.size() == d &&
                    m.encoder.embeddings.rows() == d &&
                    m.encoder.embeddings.cols() == static_cast<Eigen::Index>(m.encoder.vocab.size()) &&
                    m.head.weight.rows() == static_cast<Eigen::Index>(kNumLabels) &&
                    m.head.weight.cols() == 2 * d &&
                    m.head.bias.size() == static_cast<Eigen::Index>(kNumLabels);
    if (!ok) throw Error(ErrorKind::kDataError, "checkpoint tensor shapes are inconsistent");
    return m;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kDataError, std::string("malformed checkpoint: ") + e.what());
  }
}

void DetectorModel::save(const std::string& path) const {
  write_file(path, checkpoint_json(*this).dump() + "\n");
}

DetectorModel DetectorModel::load(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kDataError, path + ": " + e.what());
  }
  return checkpoint_from_json(j);
}

DatasetSplit stratified_split(const std::vector<LabeledSample>& corpus, std::uint64_t seed) {
  std::array<std::vector<std::size_t>, kNumLabels> by_class;
  for (std::size_t i = 0; i < corpus.size(); ++i) by_class[label_index(corpus[i].label)].push_back(i);
  DatasetSplit split;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    auto& idx = by_class[c];
    if (idx.size() < 2) {
      throw Error(ErrorKind::kClassUnderflow, std::string(label_name(kAllLabels[c])) + " has " +
                                                  std::to_string(idx.size()) + " samples");
    }
    Rng rng(mix_seed(seed, 0x5100 + c));
    rng.shuffle(idx);
    const std::size_t tenth = idx.size() / 10;
    split.validation.insert(split.validation.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(tenth));
    split.test.insert(split.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(tenth),
                      idx.begin() + static_cast<std::ptrdiff_t>(2 * tenth));
    split.train.insert(split.train.end(), idx.begin() + static_cast<std::ptrdiff_t>(2 * tenth), idx.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.validation.begin(), split.validation.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

namespace {

DetectionReport score(const DetectorModel& model, const std::vector<Example>& examples,
                      const std::vector<std::size_t>& indices) {
  std::vector<DefectLabel> preds;
  std::vector<DefectLabel> golds;
  for (std::size_t i : indices) {
    preds.push_back(model.predict(examples[i]).label);
    golds.push_back(examples[i].label);
  }
  return detection_metrics(preds, golds);
}

}  // namespace

TrainResult train(const std::vector<LabeledSample>& corpus, const TrainConfig& config) {
  config.validate();
  TrainResult result;
  result.split = stratified_split(corpus, config.seed);

  std::vector<std::string> texts;
  for (std::size_t i : result.split.train) {
    texts.push_back(corpus[i].target.raw_text);
    texts.push_back(corpus[i].context.source_text);
  }
  DetectorModel model;
  model.config = config;
  model.encoder = EncoderModel(Vocabulary::build(texts, config.min_token_count), config.embedding_dim,
                               mix_seed(config.seed, 1));
  model.head = ClassifierHead(config.embedding_dim);

  std::vector<Example> examples;
  examples.reserve(corpus.size());
  for (const auto& s : corpus) examples.push_back(model.example(s.target, s.context, s.label));

  AdamSlot<Matrix> s_emb, s_w1, s_w2, s_hw;
  AdamSlot<Vector> s_b1, s_b2, s_hb;
  long step = 0;
  double best_f1 = -std::numeric_limits<double>::infinity();
  DetectorModel best = model;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::vector<std::size_t> order = result.split.train;
    Rng shuffler(mix_seed(config.seed, 0x100 + static_cast<std::uint64_t>(epoch)));
    shuffler.shuffle(order);
    Rng dropout_rng(mix_seed(config.seed, 0x200 + static_cast<std::uint64_t>(epoch)));

    double loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      std::vector<const Example*> batch;
      for (std::size_t k = start; k < end; ++k) batch.push_back(&examples[order[k]]);
      Gradients g;
      const LossValue loss = batch_loss(model.encoder, model.head, batch, config.alpha, &g,
                                        &dropout_rng, config.dropout);
      loss_sum += loss.value * static_cast<double>(batch.size());
      ++step;
      adam_update(model.encoder.embeddings, g.embeddings, s_emb, config, step);
      adam_update(model.encoder.w1, g.w1, s_w1, config, step);
      adam_update(model.encoder.b1, g.b1, s_b1, config, step);
      adam_update(model.encoder.w2, g.w2, s_w2, config, step);
      adam_update(model.encoder.b2, g.b2, s_b2, config, step);
      adam_update(model.head.weight, g.head_weight, s_hw, config, step);
      adam_update(model.head.bias, g.head_bias, s_hb, config, step);
    }

    EpochMetrics m;
    m.epoch = epoch;
    m.train_loss = order.empty() ? 0.0 : loss_sum / static_cast<double>(order.size());
    if (!result.split.validation.empty()) {
      const auto report = score(model, examples, result.split.validation);
      m.validation_f1_macro = report.f1_macro;
      m.validation_accuracy = report.accuracy;
    }
    result.history.push_back(m);
    const double f1 = result.split.validation.empty() ? static_cast<double>(epoch) : m.validation_f1_macro;
    if (f1 > best_f1) {
      best_f1 = f1;
      best = model;
      result.best_epoch = epoch;
    }
  }
  result.model = std::move(best);
  if (!result.split.test.empty()) result.test_report = score(result.model, examples, result.split.test);
  return result;
}

}  // namespace logfix
