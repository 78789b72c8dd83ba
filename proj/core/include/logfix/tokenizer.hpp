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

// Code-aware tokenization: words, sub-words and punctuation, mapped through
// a closed vocabulary with hashed buckets for unknown tokens.

#ifndef LOGFIX_TOKENIZER_HPP_
#define LOGFIX_TOKENIZER_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace logfix {

// Marker emitted before an all-uppercase word inside a string literal.
inline constexpr std::string_view kCapsToken = "<caps>";

// Splits on whitespace and punctuation, then splits snake_case and camelCase
// identifiers into lowercase sub-words. Every punctuation byte is a token.
std::vector<std::string> segment_code(std::string_view text);

struct TokenSequence {
  std::vector<int> tokens;
  bool truncated = false;
};

class Vocabulary {
 public:
  static constexpr int kOovBuckets = 64;

  Vocabulary() = default;
  // Known tokens get ids kOovBuckets.. in the given order.
  explicit Vocabulary(std::vector<std::string> known);

  // Tokens seen at least min_count times across the segmented texts, sorted.
  static Vocabulary build(const std::vector<std::string>& texts, std::size_t min_count = 2);

  int id(std::string_view token) const;
  std::size_t size() const { return static_cast<std::size_t>(kOovBuckets) + known_.size(); }
  const std::vector<std::string>& known() const { return known_; }

 private:
  std::vector<std::string> known_;
  std::map<std::string, int, std::less<>> ids_;
};

TokenSequence tokenize(std::string_view text, const Vocabulary& vocab, std::size_t max_tokens = 1024);

}  // namespace logfix

#endif  // LOGFIX_TOKENIZER_HPP_
