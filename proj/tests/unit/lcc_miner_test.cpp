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

#include "logfix/lcc_miner.hpp"

#include <gtest/gtest.h>

#include "logfix/diff.hpp"
#include "test_support.hpp"

namespace logfix {
namespace {

using testing::fixture;

RepoMetadata target_repo() {
  RepoMetadata r;
  r.name = "acme/service";
  r.commit_count = 7618;
  r.star_count = 1001;
  r.created_at = parse_date("2018-04-02");
  r.last_commit_at = parse_date("2023-06-30");
  r.is_fork = false;
  return r;
}

const char* kBefore =
    "class Handler {\n"
    "  void handle(Command command) {\n"
    "    logger.debug(\"Intellflo received refresh command\");\n"
    "    update(command);\n"
    "  }\n"
    "}\n";

CommitSnapshotPair commit(const std::string& before, const std::string& after) {
  return {"c1", "c0", {{"src/Handler.java", before, after}}};
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST(DateTest, ParsesAndOrders) {
  EXPECT_EQ(format_date(parse_date("2019-12-31T10:00:00Z")), "2019-12-31");
  EXPECT_LT(parse_date("2019-12-31"), parse_date("2020-01-01"));
  EXPECT_ANY_THROW(parse_date("yesterday"));
}

TEST(FilterTargetRepositoriesTest, KeepsQualifyingRepository) {
  EXPECT_EQ(filter_target_repositories({target_repo()}).size(), 1u);
}

TEST(FilterTargetRepositoriesTest, StarsMustExceedThreshold) {
  auto r = target_repo();
  r.star_count = 1000;
  EXPECT_TRUE(filter_target_repositories({r}).empty());
}

TEST(FilterTargetRepositoriesTest, ForksExcluded) {
  auto r = target_repo();
  r.is_fork = true;
  EXPECT_TRUE(filter_target_repositories({r}).empty());
}

TEST(FilterTargetRepositoriesTest, CommitRangeAndDateBoundsInclusive) {
  auto r = target_repo();
  r.commit_count = 1000;
  r.created_at = parse_date("2019-12-31");
  r.last_commit_at = parse_date("2023-01-01");
  EXPECT_EQ(filter_target_repositories({r}).size(), 1u);
  r.commit_count = 100000;
  EXPECT_EQ(filter_target_repositories({r}).size(), 1u);
  r.commit_count = 100001;
  EXPECT_TRUE(filter_target_repositories({r}).empty());
  r = target_repo();
  r.commit_count = 999;
  EXPECT_TRUE(filter_target_repositories({r}).empty());
  r = target_repo();
  r.created_at = parse_date("2020-01-01");
  EXPECT_TRUE(filter_target_repositories({r}).empty());
  r = target_repo();
  r.last_commit_at = parse_date("2022-12-31");
  EXPECT_TRUE(filter_target_repositories({r}).empty());
}

TEST(FilterTargetRepositoriesTest, Idempotent) {
  std::vector<RepoMetadata> repos;
  for (int i = 0; i < 20; ++i) {
    auto r = target_repo();
    r.star_count = 900 + 20 * i;
    r.is_fork = i % 3 == 0;
    repos.push_back(r);
  }
  const auto once = filter_target_repositories(repos);
  const auto twice = filter_target_repositories(once);
  ASSERT_EQ(once.size(), twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) EXPECT_EQ(once[i].star_count, twice[i].star_count);
}

TEST(FilterWellMaintainedTest, AllCriteriaRequired) {
  RepoMetadata r;
  r.initiator_kind = InitiatorKind::kCompany;
  r.issues_enabled = true;
  r.has_license = true;
  EXPECT_TRUE(filter_well_maintained(r));
  r.initiator_kind = InitiatorKind::kIndividual;
  EXPECT_FALSE(filter_well_maintained(r));
  r.initiator_kind = InitiatorKind::kCompany;
  r.issues_enabled = false;
  EXPECT_FALSE(filter_well_maintained(r));
  r.issues_enabled = true;
  r.has_license = false;
  EXPECT_FALSE(filter_well_maintained(r));
}

TEST(RepoMetadataTest, JsonRoundTrip) {
  const auto r = target_repo();
  const auto back = Json(r).get<RepoMetadata>();
  EXPECT_EQ(back.name, r.name);
  EXPECT_EQ(back.created_at, r.created_at);
  EXPECT_EQ(back.commit_count, r.commit_count);
}

TEST(AnalyzeCommitTest, PureLoggingModificationGivesOneChange) {
  const auto after = replace(kBefore, "Intellflo", "IntelliFlo");
  const auto lccs = analyze_commit(commit(kBefore, after), {}, "p");
  ASSERT_EQ(lccs.size(), 1u);
  EXPECT_EQ(lccs[0].before.static_text, "Intellflo received refresh command");
  EXPECT_EQ(lccs[0].after.static_text, "IntelliFlo received refresh command");
  EXPECT_EQ(lccs[0].commit_id, "c1");
  EXPECT_EQ(lccs[0].project_id, "p");
  EXPECT_EQ(lccs[0].context.qualified_name, "Handler.handle");
  EXPECT_NE(lccs[0].context.source_text.find("IntelliFlo"), std::string::npos);
}

TEST(AnalyzeCommitTest, MixedCommitGivesNothing) {
  auto after = replace(kBefore, "Intellflo", "IntelliFlo");
  after = replace(after, "update(command)", "refresh(command)");
  std::vector<MineDiagnostic> diags;
  EXPECT_TRUE(analyze_commit(commit(kBefore, after), {}, "p", &diags).empty());
  EXPECT_FALSE(diags.empty());
}

TEST(AnalyzeCommitTest, DeletionGivesNothing) {
  const auto after = replace(kBefore, "    logger.debug(\"Intellflo received refresh command\");\n", "");
  EXPECT_TRUE(analyze_commit(commit(kBefore, after), {}, "p").empty());
}

TEST(AnalyzeCommitTest, AdditionGivesNothing) {
  const auto after = replace(kBefore, "    update(command);\n",
                             "    update(command);\n    logger.debug(\"done\");\n");
  EXPECT_TRUE(analyze_commit(commit(kBefore, after), {}, "p").empty());
}

TEST(AnalyzeCommitTest, WhitespaceOnlyChangeExcluded) {
  const auto after = replace(kBefore, "    logger.debug(", "      logger.debug(");
  EXPECT_TRUE(analyze_commit(commit(kBefore, after), {}, "p").empty());
}

TEST(AnalyzeCommitTest, MultiLineStatementChange) {
  const std::string before =
      "class A {\n"
      "  void f(int a) {\n"
      "    log.info(\"value {}\",\n"
      "        a);\n"
      "  }\n"
      "}\n";
  const auto after = replace(before, "        a);", "        a + 1);");
  const auto lccs = analyze_commit(commit(before, after), {}, "p");
  ASSERT_EQ(lccs.size(), 1u);
  EXPECT_EQ(lccs[0].after.variables, std::vector<std::string>{"a + 1"});
}

TEST(AnalyzeCommitTest, AddedFileDisqualifies) {
  CommitSnapshotPair c = commit(kBefore, replace(kBefore, "Intellflo", "IntelliFlo"));
  c.changed_files.push_back({"src/New.java", std::nullopt, "class New {}\n"});
  EXPECT_TRUE(analyze_commit(c, {}, "p").empty());
}

TEST(AnalyzeCommitTest, SoundnessEveryEmittedChangeTouchesOnlyLoggingLines) {
  const auto after = replace(kBefore, "Intellflo", "IntelliFlo");
  const auto lccs = analyze_commit(commit(kBefore, after), {}, "p");
  ASSERT_EQ(lccs.size(), 1u);
  for (const auto& e : diff_lines(kBefore, after)) {
    ASSERT_TRUE(e.after_line);
    EXPECT_GE(*e.after_line, lccs[0].after.location.start_line);
    EXPECT_LE(*e.after_line, lccs[0].after.location.end_line);
  }
}

TEST(FixtureHistoryTest, MinesExactlyTwoChanges) {
  FixtureHistoryProvider history(fixture("lcc_history"));
  ASSERT_EQ(history.size(), 6u);
  EXPECT_EQ(history.load(0).commit_id, "b2c41d9");
  EXPECT_EQ(history.load(0).parent_id, "a1f0c3e");
  const auto result = mine_history(history, {}, "sync", 1);
  ASSERT_EQ(result.lccs.size(), 2u);
  EXPECT_EQ(result.lccs[0].before.static_text, "Intellflo received refresh command {}");
  EXPECT_EQ(result.lccs[0].after.static_text, "IntelliFlo received refresh command {}");
  EXPECT_EQ(result.lccs[1].before.static_text, "Handler stoped, {} pending");
  EXPECT_EQ(result.lccs[1].after.static_text, "Handler stopped, {} pending");
}

TEST(FixtureHistoryTest, ParallelMiningMatchesSerial) {
  FixtureHistoryProvider history(fixture("lcc_history"));
  const auto serial = mine_history(history, {}, "sync", 1);
  const auto parallel = mine_history(history, {}, "sync", 4);
  EXPECT_EQ(Json(serial.lccs).dump(), Json(parallel.lccs).dump());
}

TEST(FixtureHistoryTest, ExtractLccsOverLoadedHistory) {
  FixtureHistoryProvider provider(fixture("lcc_history"));
  std::vector<CommitSnapshotPair> history;
  for (std::size_t i = 0; i < provider.size(); ++i) history.push_back(provider.load(i));
  const auto result = extract_lccs(history, {}, "sync");
  EXPECT_EQ(result.lccs.size(), 2u);
  EXPECT_EQ(result.diagnostics.size(), 4u);
}

}  // namespace
}  // namespace logfix
