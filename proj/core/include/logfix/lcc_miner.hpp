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

// Mining of log-centric changes: commits whose edits touch nothing but
// logging statements, and the repository metadata filters used to pick
// source projects.

#ifndef LOGFIX_LCC_MINER_HPP_
#define LOGFIX_LCC_MINER_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "logfix/json_io.hpp"
#include "logfix/model.hpp"
#include "logfix/source_parser.hpp"

namespace logfix {

struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  auto operator<=>(const Date&) const = default;
};

// Accepts "YYYY-MM-DD" optionally followed by a time part.
Date parse_date(std::string_view text);
std::string format_date(const Date& date);

enum class InitiatorKind { kCompany, kIndividual, kUnknown };

struct RepoMetadata {
  std::string name;
  long long commit_count = 0;
  long long star_count = 0;
  Date created_at;
  Date last_commit_at;
  InitiatorKind initiator_kind = InitiatorKind::kUnknown;
  bool issues_enabled = false;
  bool has_license = false;
  bool is_fork = false;
};

void to_json(Json& j, const RepoMetadata& r);
void from_json(const Json& j, RepoMetadata& r);

// 1,000 <= commits <= 100,000, stars > 1,000, created on or before
// 2019-12-31, last commit on or after 2023-01-01, not a fork.
std::vector<RepoMetadata> filter_target_repositories(const std::vector<RepoMetadata>& repos);
// Company-initiated, issues enabled, licensed.
bool filter_well_maintained(const RepoMetadata& repo);

struct ChangedFile {
  std::string path;
  std::optional<std::string> before_text;  // empty when the file was added
  std::optional<std::string> after_text;   // empty when the file was removed
};

struct CommitSnapshotPair {
  std::string commit_id;
  std::string parent_id;
  std::vector<ChangedFile> changed_files;
};

// Source of commit pairs in parent-before-child order. load() must be safe
// to call concurrently.
class HistoryProvider {
 public:
  virtual ~HistoryProvider() = default;
  virtual std::size_t size() const = 0;
  virtual CommitSnapshotPair load(std::size_t index) const = 0;
};

// Reads `<root>/<seq>_<commitid>/...` full-tree snapshots. Directories are
// ordered by their numeric sequence prefix; each consecutive pair of
// snapshots forms one commit.
class FixtureHistoryProvider : public HistoryProvider {
 public:
  explicit FixtureHistoryProvider(const std::string& root);
  std::size_t size() const override;
  CommitSnapshotPair load(std::size_t index) const override;

 private:
  struct Snapshot {
    std::string commit_id;
    std::string dir;
  };
  std::vector<Snapshot> snapshots_;
};

// Shells out to the system git client. Walks first-parent history of HEAD,
// oldest first.
class GitHistoryProvider : public HistoryProvider {
 public:
  explicit GitHistoryProvider(std::string repo, std::optional<Date> since = std::nullopt);
  std::size_t size() const override;
  CommitSnapshotPair load(std::size_t index) const override;

 private:
  std::string repo_;
  std::vector<std::pair<std::string, std::string>> commits_;  // (commit, parent)
};

struct MineDiagnostic {
  std::string commit_id;
  std::string message;
};

struct MineResult {
  std::vector<LogCentricChange> lccs;
  std::vector<MineDiagnostic> diagnostics;
};

// LCCs contributed by one commit. Empty unless every changed line of every
// changed file lies inside a logging statement and the statements of both
// versions match one-to-one by (method, ordinal).
std::vector<LogCentricChange> analyze_commit(const CommitSnapshotPair& commit,
                                             const ParserConfig& config,
                                             const std::string& project_id,
                                             std::vector<MineDiagnostic>* diagnostics = nullptr);

MineResult extract_lccs(const std::vector<CommitSnapshotPair>& history,
                        const ParserConfig& config, const std::string& project_id = "");

// Parallel over commits with `jobs` workers; results are merged in commit
// order so output does not depend on scheduling.
MineResult mine_history(const HistoryProvider& history, const ParserConfig& config,
                        const std::string& project_id, int jobs = 1);

}  // namespace logfix

#endif  // LOGFIX_LCC_MINER_HPP_
