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

// Line-level edit scripts between two versions of a file.

#ifndef LOGFIX_DIFF_HPP_
#define LOGFIX_DIFF_HPP_

#include <optional>
#include <string_view>
#include <vector>

namespace logfix {

enum class EditKind { kAdd, kDelete, kModify };

struct LineEdit {
  EditKind kind = EditKind::kModify;
  std::optional<int> before_line;  // 1-based; empty for kAdd
  std::optional<int> after_line;   // 1-based; empty for kDelete

  bool operator==(const LineEdit&) const = default;
};

// Minimal edit script (Myers). Inside each contiguous hunk, deletions are
// paired with additions in order and reported as kModify; the remainder stay
// kAdd or kDelete. Edits are ordered by position.
std::vector<LineEdit> diff_lines(std::string_view before, std::string_view after);

}  // namespace logfix

#endif  // LOGFIX_DIFF_HPP_
