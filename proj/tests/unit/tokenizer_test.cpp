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

#include "logfix/tokenizer.hpp"

#include <gtest/gtest.h>

#include "logfix/util.hpp"

namespace logfix {
namespace {

using Tokens = std::vector<std::string>;

TEST(SegmentCodeTest, SplitsCamelSnakeAndDigits) {
  EXPECT_EQ(segment_code("getHTTPResponse2xx"), (Tokens{"get", "http", "response", "2", "xx"}));
  EXPECT_EQ(segment_code("max_retry_count"), (Tokens{"max", "retry", "count"}));
  EXPECT_EQ(segment_code("remoteAddr"), (Tokens{"remote", "addr"}));
}

TEST(SegmentCodeTest, PunctuationBytesAreTokens) {
  EXPECT_EQ(segment_code("log.info(x);"), (Tokens{"log", ".", "info", "(", "x", ")", ";"}));
}

TEST(SegmentCodeTest, CapsMarkerOnlyInsideStrings) {
  EXPECT_EQ(segment_code("LOG.info(\"channel CLOSED\")"),
            (Tokens{"log", ".", "info", "(", "\"", "channel", std::string(kCapsToken), "closed", "\"", ")"}));
  EXPECT_EQ(segment_code("\"X\""), (Tokens{"\"", "x", "\""}));
}

TEST(SegmentCodeTest, EscapedQuoteKeepsStringState) {
  const auto t = segment_code("\"a \\\" OK\" NOT");
  ASSERT_FALSE(t.empty());
  EXPECT_EQ(t.back(), "not");
  EXPECT_NE(std::find(t.begin(), t.end(), std::string(kCapsToken)), t.end());
  EXPECT_EQ(std::count(t.begin(), t.end(), std::string(kCapsToken)), 1);
}

TEST(VocabularyTest, KnownTokensAfterBuckets) {
  const auto vocab = Vocabulary::build({"alpha beta", "alpha gamma", "beta"}, 2);
  EXPECT_EQ(vocab.known(), (Tokens{"alpha", "beta"}));
  EXPECT_EQ(vocab.size(), 66u);
  EXPECT_EQ(vocab.id("alpha"), 64);
  EXPECT_EQ(vocab.id("beta"), 65);
  const int oov = vocab.id("gamma");
  EXPECT_GE(oov, 0);
  EXPECT_LT(oov, Vocabulary::kOovBuckets);
  EXPECT_EQ(oov, static_cast<int>(fnv1a64("gamma") % Vocabulary::kOovBuckets));
}

TEST(TokenizeTest, TruncatesAtLimit) {
  const Vocabulary vocab(Tokens{"a"});
  std::string text;
  for (int i = 0; i < 10; ++i) text += "a ";
  const auto seq = tokenize(text, vocab, 4);
  EXPECT_EQ(seq.tokens.size(), 4u);
  EXPECT_TRUE(seq.truncated);
  const auto full = tokenize(text, vocab);
  EXPECT_EQ(full.tokens.size(), 10u);
  EXPECT_FALSE(full.truncated);
  for (int id : full.tokens) EXPECT_EQ(id, 64);
}

}  // namespace
}  // namespace logfix
