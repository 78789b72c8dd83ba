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

#ifndef LOGFIX_ERROR_HPP_
#define LOGFIX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace logfix {

// Error categories surfaced by the library. The CLI maps these onto exit
// codes: data errors exit 2, backend errors exit 3.
enum class ErrorKind {
  kUnknownLevel,
  kUnbalancedBraces,
  kNoMutableWord,
  kNoCandidate,
  kInsufficientInputs,
  kBackendError,
  kMalformedReply,
  kNotALoggingStatement,
  kEmptyPool,
  kUnknownDocument,
  kClassUnderflow,
  kLengthMismatch,
  kEmptyReference,
  kDegenerateOrigin,
  kDegenerateVector,
  kConfigError,
  kDataError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace logfix

#endif  // LOGFIX_ERROR_HPP_
