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

#include "logfix/diff.hpp"

#include <gtest/gtest.h>

#include "logfix/util.hpp"

namespace logfix {
namespace {

TEST(DiffLinesTest, IdenticalTextsHaveNoEdits) {
  EXPECT_TRUE(diff_lines("a\nb\nc\n", "a\nb\nc\n").empty());
  EXPECT_TRUE(diff_lines("", "").empty());
}

TEST(DiffLinesTest, OneReplacedLineIsModify) {
  const auto edits = diff_lines("a\nb\nc\n", "a\nB\nc\n");
  ASSERT_EQ(edits.size(), 1u);
  EXPECT_EQ(edits[0], (LineEdit{EditKind::kModify, 2, 2}));
}

TEST(DiffLinesTest, InsertionThenReplacement) {
  const auto edits = diff_lines("a\nb\nc\n", "a\nx\nb\nC\n");
  ASSERT_EQ(edits.size(), 2u);
  EXPECT_EQ(edits[0], (LineEdit{EditKind::kAdd, std::nullopt, 2}));
  EXPECT_EQ(edits[1], (LineEdit{EditKind::kModify, 3, 4}));
}

TEST(DiffLinesTest, PureDeletion) {
  const auto edits = diff_lines("a\nb\nc\n", "a\nc\n");
  ASSERT_EQ(edits.size(), 1u);
  EXPECT_EQ(edits[0], (LineEdit{EditKind::kDelete, 2, std::nullopt}));
}

// Replaying the edit script over `before` must produce the line count of
// `after`, and unchanged lines must pair up in order.
TEST(DiffLinesTest, EditScriptIsConsistentOnRandomTexts) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::string before;
    std::string after;
    const auto n = rng.index(12);
    const auto m = rng.index(12);
    for (std::size_t i = 0; i < n; ++i) before += std::string(1, static_cast<char>('a' + rng.index(4))) + "\n";
    for (std::size_t i = 0; i < m; ++i) after += std::string(1, static_cast<char>('a' + rng.index(4))) + "\n";
    const auto edits = diff_lines(before, after);
    long adds = 0;
    long dels = 0;
    for (const auto& e : edits) {
      if (e.kind == EditKind::kAdd) ++adds;
      if (e.kind == EditKind::kDelete) ++dels;
      if (e.kind == EditKind::kModify) {
        ASSERT_TRUE(e.before_line && e.after_line);
      }
    }
    EXPECT_EQ(static_cast<long>(n) - dels + adds, static_cast<long>(m));
    if (before == after) EXPECT_TRUE(edits.empty());
  }
}

}  // namespace
}  // namespace logfix
