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

// JSON mapping for the domain records and JSON Lines streaming. Field names
// are the snake_case member names of the C++ records.

#ifndef LOGFIX_JSON_IO_HPP_
#define LOGFIX_JSON_IO_HPP_

#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "logfix/model.hpp"
#include "logfix/source_parser.hpp"

namespace logfix {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Placeholder& p);
void from_json(const Json& j, Placeholder& p);
void to_json(Json& j, const SourceLocation& l);
void from_json(const Json& j, SourceLocation& l);
void to_json(Json& j, const LoggingStatement& s);
void from_json(const Json& j, LoggingStatement& s);
void to_json(Json& j, const MethodContext& m);
void from_json(const Json& j, MethodContext& m);
void to_json(Json& j, const LogCentricChange& c);
void from_json(const Json& j, LogCentricChange& c);
void to_json(Json& j, const Provenance& p);
void from_json(const Json& j, Provenance& p);
void to_json(Json& j, const LabeledSample& s);
void from_json(const Json& j, LabeledSample& s);
void to_json(Json& j, const EvaluationRecord& r);
void from_json(const Json& j, EvaluationRecord& r);
void to_json(Json& j, const UpdateResult& r);
void from_json(const Json& j, UpdateResult& r);
// {"context": ..., "statements": [...]}
void to_json(Json& j, const MethodWithStatements& m);
void from_json(const Json& j, MethodWithStatements& m);

// Calls fn for every non-blank line of a JSON Lines file, one parsed value
// at a time. Parse failures throw Error(kDataError) naming the line number.
void for_each_jsonl(const std::string& path, const std::function<void(const Json&)>& fn);

template <typename T>
std::vector<T> read_jsonl(const std::string& path) {
  std::vector<T> out;
  for_each_jsonl(path, [&](const Json& j) { out.push_back(j.get<T>()); });
  return out;
}

// Writes one compact JSON document per line. Output bytes depend only on
// the values written.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path);

  void write(const Json& value);
  template <typename T>
  void write_record(const T& record) {
    write(Json(record));
  }

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace logfix

#endif  // LOGFIX_JSON_IO_HPP_
