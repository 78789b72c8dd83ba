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

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <thread>

#include "logfix/diff.hpp"
#include "logfix/error.hpp"
#include "logfix/util.hpp"

namespace logfix {

namespace fs = std::filesystem;

Date parse_date(std::string_view text) {
  const std::string t = trim(text);
  Date d;
  if (t.size() < 10 || t[4] != '-' || t[7] != '-' ||
      std::sscanf(t.c_str(), "%4d-%2d-%2d", &d.year, &d.month, &d.day) != 3 ||
      d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) {
    throw Error(ErrorKind::kDataError, "malformed date '" + t + "'");
  }
  return d;
}

std::string format_date(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", date.year, date.month, date.day);
  return buf;
}

namespace {

std::string_view initiator_name(InitiatorKind kind) {
  switch (kind) {
    case InitiatorKind::kCompany: return "COMPANY";
    case InitiatorKind::kIndividual: return "INDIVIDUAL";
    case InitiatorKind::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

InitiatorKind parse_initiator(const std::string& text) {
  const std::string u = to_upper(text);
  if (u == "COMPANY") return InitiatorKind::kCompany;
  if (u == "INDIVIDUAL") return InitiatorKind::kIndividual;
  if (u == "UNKNOWN") return InitiatorKind::kUnknown;
  throw Error(ErrorKind::kDataError, "unknown initiator kind '" + text + "'");
}

}  // namespace

void to_json(Json& j, const RepoMetadata& r) {
  j = Json{{"name", r.name},
           {"commit_count", r.commit_count},
           {"star_count", r.star_count},
           {"created_at", format_date(r.created_at)},
           {"last_commit_at", format_date(r.last_commit_at)},
           {"initiator_kind", initiator_name(r.initiator_kind)},
           {"issues_enabled", r.issues_enabled},
           {"has_license", r.has_license},
           {"is_fork", r.is_fork}};
}

void from_json(const Json& j, RepoMetadata& r) {
  r.name = j.at("name").get<std::string>();
  r.commit_count = j.at("commit_count").get<long long>();
  r.star_count = j.at("star_count").get<long long>();
  if (r.commit_count < 0 || r.star_count < 0) {
    throw Error(ErrorKind::kDataError, "negative count for " + r.name);
  }
  r.created_at = parse_date(j.at("created_at").get<std::string>());
  r.last_commit_at = parse_date(j.at("last_commit_at").get<std::string>());
  r.initiator_kind = parse_initiator(j.value("initiator_kind", std::string("UNKNOWN")));
  r.issues_enabled = j.value("issues_enabled", false);
  r.has_license = j.value("has_license", false);
  r.is_fork = j.value("is_fork", false);
}

std::vector<RepoMetadata> filter_target_repositories(const std::vector<RepoMetadata>& repos) {
  static constexpr Date kCreatedBy{2019, 12, 31};
  static constexpr Date kActiveSince{2023, 1, 1};
  std::vector<RepoMetadata> kept;
  for (const auto& r : repos) {
    if (r.commit_count >= 1000 && r.commit_count <= 100000 && r.star_count > 1000 &&
        r.created_at <= kCreatedBy && r.last_commit_at >= kActiveSince && !r.is_fork) {
      kept.push_back(r);
    }
  }
  return kept;
}

bool filter_well_maintained(const RepoMetadata& repo) {
  return repo.initiator_kind == InitiatorKind::kCompany && repo.issues_enabled &&
         repo.has_license;
}

// ---------------------------------------------------------------------------

FixtureHistoryProvider::FixtureHistoryProvider(const std::string& root) {
  if (!fs::is_directory(root)) throw Error(ErrorKind::kDataError, "not a directory: " + root);
  std::vector<std::pair<long long, Snapshot>> found;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    const auto us = name.find('_');
    if (us == std::string::npos || us == 0) continue;
    const std::string seq = name.substr(0, us);
    if (!std::all_of(seq.begin(), seq.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
    found.push_back({std::stoll(seq), {name.substr(us + 1), entry.path().string()}});
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& f : found) snapshots_.push_back(std::move(f.second));
}

std::size_t FixtureHistoryProvider::size() const {
  return snapshots_.size() < 2 ? 0 : snapshots_.size() - 1;
}

namespace {

std::map<std::string, std::string> read_tree(const std::string& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    files[fs::relative(entry.path(), dir).generic_string()] = read_file(entry.path().string());
  }
  return files;
}

}  // namespace

CommitSnapshotPair FixtureHistoryProvider::load(std::size_t index) const {
  if (index >= size()) throw Error(ErrorKind::kDataError, "commit index out of range");
  const auto& parent = snapshots_[index];
  const auto& child = snapshots_[index + 1];
  const auto before = read_tree(parent.dir);
  const auto after = read_tree(child.dir);
  CommitSnapshotPair pair;
  pair.commit_id = child.commit_id;
  pair.parent_id = parent.commit_id;
  std::set<std::string> paths;
  for (const auto& [p, _] : before) paths.insert(p);
  for (const auto& [p, _] : after) paths.insert(p);
  for (const auto& p : paths) {
    auto b = before.find(p);
    auto a = after.find(p);
    ChangedFile f;
    f.path = p;
    if (b != before.end()) f.before_text = b->second;
    if (a != after.end()) f.after_text = a->second;
    if (f.before_text != f.after_text) pair.changed_files.push_back(std::move(f));
  }
  return pair;
}

// ---------------------------------------------------------------------------

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += '\'';
  return out;
}

// Runs a command and returns its standard output; nullopt on non-zero exit.
std::optional<std::string> run_command(const std::string& command) {
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return std::nullopt;
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  if (status != 0) return std::nullopt;
  return out;
}

}  // namespace

GitHistoryProvider::GitHistoryProvider(std::string repo, std::optional<Date> since)
    : repo_(std::move(repo)) {
  std::string cmd = "git -C " + shell_quote(repo_) +
                    " log --reverse --first-parent --format='%H %P'";
  if (since) cmd += " --since=" + format_date(*since);
  cmd += " HEAD";
  const auto out = run_command(cmd);
  if (!out) throw Error(ErrorKind::kDataError, "git log failed in " + repo_);
  for (const auto& line : split_lines(*out)) {
    const std::string norm = normalize_whitespace(line);
    const auto sp = norm.find(' ');
    if (sp == std::string::npos) continue;  // root commit
    std::string parent = norm.substr(sp + 1);
    const auto sp2 = parent.find(' ');
    if (sp2 != std::string::npos) parent = parent.substr(0, sp2);
    commits_.emplace_back(norm.substr(0, sp), parent);
  }
}

std::size_t GitHistoryProvider::size() const { return commits_.size(); }

CommitSnapshotPair GitHistoryProvider::load(std::size_t index) const {
  const auto& [commit, parent] = commits_.at(index);
  CommitSnapshotPair pair;
  pair.commit_id = commit;
  pair.parent_id = parent;
  const std::string base = "git -C " + shell_quote(repo_);
  const auto names = run_command(base + " diff --no-renames --name-only " + parent + " " + commit);
  if (!names) throw Error(ErrorKind::kDataError, "git diff failed for " + commit);
  for (const auto& path : split_lines(*names)) {
    if (path.empty()) continue;
    ChangedFile f;
    f.path = path;
    f.before_text = run_command(base + " show " + shell_quote(parent + ":" + path));
    f.after_text = run_command(base + " show " + shell_quote(commit + ":" + path));
    pair.changed_files.push_back(std::move(f));
  }
  return pair;
}

// ---------------------------------------------------------------------------

namespace {

struct VersionIndex {
  // key = path \x1f qualified_name \x1f occurrence
  std::map<std::string, std::pair<const MethodContext*, std::vector<const LoggingStatement*>>> methods;
  std::vector<std::pair<int, int>> spans;
};

void index_version(const ExtractResult& extracted, const std::string& path, VersionIndex& idx) {
  std::map<std::string, int> seen;
  for (const auto& m : extracted.methods) {
    const int occurrence = seen[m.context.qualified_name]++;
    const std::string key =
        path + '\x1f' + m.context.qualified_name + '\x1f' + std::to_string(occurrence);
    auto& slot = idx.methods[key];
    slot.first = &m.context;
    for (const auto& st : m.statements) {
      slot.second.push_back(&st);
      idx.spans.emplace_back(st.location.start_line, st.location.end_line);
    }
  }
}

bool covered(const std::vector<std::pair<int, int>>& spans, int line) {
  return std::any_of(spans.begin(), spans.end(),
                     [&](const auto& s) { return s.first <= line && line <= s.second; });
}

}  // namespace

std::vector<LogCentricChange> analyze_commit(const CommitSnapshotPair& commit,
                                             const ParserConfig& config,
                                             const std::string& project_id,
                                             std::vector<MineDiagnostic>* diagnostics) {
  auto reject = [&](const std::string& why) {
    if (diagnostics != nullptr) diagnostics->push_back({commit.commit_id, why});
    return std::vector<LogCentricChange>{};
  };
  if (commit.changed_files.empty()) return reject("no changed files");

  // Extraction results must outlive the indexes that point into them.
  std::vector<ExtractResult> before_parsed;
  std::vector<ExtractResult> after_parsed;
  before_parsed.reserve(commit.changed_files.size());
  after_parsed.reserve(commit.changed_files.size());
  std::vector<LogCentricChange> out;

  for (const auto& file : commit.changed_files) {
    if (!file.before_text || !file.after_text) {
      return reject("file added or removed: " + file.path);
    }
    before_parsed.push_back(extract_methods(*file.before_text, file.path, config, project_id));
    after_parsed.push_back(extract_methods(*file.after_text, file.path, config, project_id));
    const auto& eb = before_parsed.back();
    const auto& ea = after_parsed.back();
    auto unbalanced = [](const ExtractResult& r) {
      return std::any_of(r.errors.begin(), r.errors.end(), [](const ParseDiagnostic& d) {
        return d.kind == ErrorKind::kUnbalancedBraces;
      });
    };
    if (unbalanced(eb) || unbalanced(ea)) return reject("unparsable file: " + file.path);

    VersionIndex vb;
    VersionIndex va;
    index_version(eb, file.path, vb);
    index_version(ea, file.path, va);

    for (const auto& edit : diff_lines(*file.before_text, *file.after_text)) {
      if (edit.before_line && !covered(vb.spans, *edit.before_line)) {
        return reject("non-logging line changed: " + file.path + ":" +
                      std::to_string(*edit.before_line));
      }
      if (edit.after_line && !covered(va.spans, *edit.after_line)) {
        return reject("non-logging line changed: " + file.path + ":" +
                      std::to_string(*edit.after_line));
      }
    }

    if (vb.methods.size() != va.methods.size()) return reject("logging methods differ: " + file.path);
    for (const auto& [key, before_entry] : vb.methods) {
      auto it = va.methods.find(key);
      if (it == va.methods.end()) return reject("unmatched method in " + file.path);
      const auto& bs = before_entry.second;
      const auto& as = it->second.second;
      if (bs.size() != as.size()) return reject("logging statement added or deleted in " + file.path);
      for (std::size_t i = 0; i < bs.size(); ++i) {
        if (normalize_whitespace(bs[i]->raw_text) == normalize_whitespace(as[i]->raw_text)) continue;
        LogCentricChange lcc;
        lcc.project_id = project_id;
        lcc.commit_id = commit.commit_id;
        lcc.before = *bs[i];
        lcc.after = *as[i];
        lcc.context = *it->second.first;
        lcc.context.project_id = project_id;
        out.push_back(std::move(lcc));
      }
    }
  }
  if (out.empty()) return reject("no logging statement text changed");
  return out;
}

MineResult extract_lccs(const std::vector<CommitSnapshotPair>& history,
                        const ParserConfig& config, const std::string& project_id) {
  MineResult result;
  for (const auto& commit : history) {
    auto lccs = analyze_commit(commit, config, project_id, &result.diagnostics);
    for (auto& l : lccs) result.lccs.push_back(std::move(l));
  }
  return result;
}

MineResult mine_history(const HistoryProvider& history, const ParserConfig& config,
                        const std::string& project_id, int jobs) {
  const std::size_t n = history.size();
  std::vector<std::vector<LogCentricChange>> lccs(n);
  std::vector<std::vector<MineDiagnostic>> diags(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        lccs[i] = analyze_commit(history.load(i), config, project_id, &diags[i]);
      } catch (const std::exception& e) {
        diags[i].push_back({"#" + std::to_string(i), e.what()});
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs < 1 ? 1 : jobs, n));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  MineResult result;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& l : lccs[i]) result.lccs.push_back(std::move(l));
    for (auto& d : diags[i]) result.diagnostics.push_back(std::move(d));
  }
  return result;
}

}  // namespace logfix
