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

#ifndef LOGFIX_TESTS_TEST_SUPPORT_HPP_
#define LOGFIX_TESTS_TEST_SUPPORT_HPP_

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <string>

#include "logfix/error.hpp"
#include "logfix/source_parser.hpp"
#include "logfix/synthesizer.hpp"
#include "logfix/util.hpp"

namespace logfix::testing {

inline std::string fixture(const std::string& relative) {
  return std::string(LOGFIX_FIXTURE_DIR) + "/" + relative;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    std::string name = "logfix_test";
    if (info != nullptr) name += std::string("_") + info->test_suite_name() + "_" + info->name();
    path_ = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Parses one statement or fails the test.
inline LoggingStatement stmt(const std::string& raw) {
  auto parsed = parse_statement(raw, ParserConfig{});
  if (!parsed) throw std::runtime_error("not a logging call: " + raw);
  return *parsed;
}

// Well-maintained samples from the generated clean corpus, file order.
inline std::vector<LabeledSample> clean_corpus_samples() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(fixture("clean_corpus"))) {
    if (e.path().extension() == ".java") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<MethodWithStatements> methods;
  for (const auto& f : files) {
    auto r = extract_methods(read_file(f.string()), f.filename().string(), ParserConfig{}, "clean");
    for (auto& m : r.methods) methods.push_back(std::move(m));
  }
  return clean_samples(methods);
}

}  // namespace logfix::testing

#define EXPECT_LOGFIX_ERROR(expr, error_kind)                       \
  do {                                                              \
    try {                                                           \
      (void)(expr);                                                 \
      ADD_FAILURE() << "expected " << #error_kind;                  \
    } catch (const ::logfix::Error& e__) {                          \
      EXPECT_EQ(e__.kind(), ::logfix::ErrorKind::error_kind) << e__.what(); \
    }                                                               \
  } while (0)

#endif  // LOGFIX_TESTS_TEST_SUPPORT_HPP_
