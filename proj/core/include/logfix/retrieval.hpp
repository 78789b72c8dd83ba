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

// BM25 ranking over historical logging changes and exemplar selection.

#ifndef LOGFIX_RETRIEVAL_HPP_
#define LOGFIX_RETRIEVAL_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "logfix/model.hpp"

namespace logfix {

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

// Documents are token lists; the index keeps term frequencies per document
// and document frequencies per term.
class Bm25Index {
 public:
  Bm25Index() = default;
  Bm25Index(const std::vector<std::vector<std::string>>& documents, Bm25Params params = {});

  std::size_t size() const { return lengths_.size(); }
  double average_length() const { return avg_length_; }
  std::size_t document_frequency(std::string_view term) const;
  double idf(std::string_view term) const;
  // Throws Error(kUnknownDocument).
  double score(const std::vector<std::string>& query, std::size_t doc) const;
  const Bm25Params& params() const { return params_; }

 private:
  Bm25Params params_;
  std::vector<std::map<std::string, std::size_t, std::less<>>> tf_;
  std::vector<std::size_t> lengths_;
  std::map<std::string, std::size_t, std::less<>> df_;
  double avg_length_ = 0.0;
};

// Tokens of a statement used on both sides of retrieval.
std::vector<std::string> retrieval_tokens(std::string_view raw_text);

class ExemplarRetriever {
 public:
  explicit ExemplarRetriever(std::vector<LogCentricChange> lccs, Bm25Params params = {});

  // Top k changes for a target by (score desc, commit_id asc). TEMPORAL and
  // READABILITY draw only from project_id; the other types use everything.
  // Throws Error(kEmptyPool) when the scoped pool is empty.
  std::vector<LogCentricChange> select(const LoggingStatement& target, const std::string& project_id,
                                       DefectLabel label, std::size_t k = 3) const;

  const std::vector<LogCentricChange>& changes() const { return lccs_; }
  const Bm25Index& index() const { return index_; }

 private:
  std::vector<LogCentricChange> lccs_;
  Bm25Index index_;
};

// Labels whose exemplars must come from the target's own project.
bool same_project_scope(DefectLabel label);

}  // namespace logfix

#endif  // LOGFIX_RETRIEVAL_HPP_
