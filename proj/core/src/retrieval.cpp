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

#include "logfix/retrieval.hpp"

#include <algorithm>
#include <cmath>

#include "logfix/error.hpp"
#include "logfix/tokenizer.hpp"

namespace logfix {

Bm25Index::Bm25Index(const std::vector<std::vector<std::string>>& documents, Bm25Params params)
    : params_(params) {
  std::size_t total = 0;
  for (const auto& doc : documents) {
    auto& tf = tf_.emplace_back();
    for (const auto& t : doc) ++tf[t];
    for (const auto& [t, n] : tf) ++df_[t];
    lengths_.push_back(doc.size());
    total += doc.size();
  }
  avg_length_ = documents.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(documents.size());
}

std::size_t Bm25Index::document_frequency(std::string_view term) const {
  auto it = df_.find(term);
  return it == df_.end() ? 0 : it->second;
}

double Bm25Index::idf(std::string_view term) const {
  const double n = static_cast<double>(size());
  const double df = static_cast<double>(document_frequency(term));
  return std::log((n - df + 0.5) / (df + 0.5) + 1.0);
}

double Bm25Index::score(const std::vector<std::string>& query, std::size_t doc) const {
  if (doc >= size()) throw Error(ErrorKind::kUnknownDocument, "document " + std::to_string(doc));
  const auto& tf = tf_[doc];
  const double norm = avg_length_ > 0.0 ? static_cast<double>(lengths_[doc]) / avg_length_ : 0.0;
  double total = 0.0;
  for (const auto& term : query) {
    auto it = tf.find(term);
    if (it == tf.end()) continue;
    const double f = static_cast<double>(it->second);
    total += idf(term) * (f * (params_.k1 + 1.0)) /
             (f + params_.k1 * (1.0 - params_.b + params_.b * norm));
  }
  return total;
}

std::vector<std::string> retrieval_tokens(std::string_view raw_text) { return segment_code(raw_text); }

bool same_project_scope(DefectLabel label) {
  return label == DefectLabel::kTemporal || label == DefectLabel::kReadability;
}

ExemplarRetriever::ExemplarRetriever(std::vector<LogCentricChange> lccs, Bm25Params params)
    : lccs_(std::move(lccs)) {
  std::vector<std::vector<std::string>> docs;
  docs.reserve(lccs_.size());
  for (const auto& c : lccs_) docs.push_back(retrieval_tokens(c.before.raw_text));
  index_ = Bm25Index(docs, params);
}

std::vector<LogCentricChange> ExemplarRetriever::select(const LoggingStatement& target,
                                                        const std::string& project_id,
                                                        DefectLabel label, std::size_t k) const {
  if (label == DefectLabel::kNonDefect) {
    throw Error(ErrorKind::kConfigError, "exemplars are only selected for defects");
  }
  const bool scoped = same_project_scope(label);
  const auto query = retrieval_tokens(target.raw_text);
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < lccs_.size(); ++i) {
    if (scoped && lccs_[i].project_id != project_id) continue;
    ranked.emplace_back(index_.score(query, i), i);
  }
  if (ranked.empty()) {
    throw Error(ErrorKind::kEmptyPool, scoped ? "no changes from project '" + project_id + "'"
                                              : "no historical changes");
  }
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    const auto& ca = lccs_[a.second].commit_id;
    const auto& cb = lccs_[b.second].commit_id;
    if (ca != cb) return ca < cb;
    return a.second < b.second;
  });
  std::vector<LogCentricChange> out;
  for (std::size_t i = 0; i < std::min(k, ranked.size()); ++i) out.push_back(lccs_[ranked[i].second]);
  return out;
}

}  // namespace logfix
