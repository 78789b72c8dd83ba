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

#include <algorithm>
#include <string>
#include <unordered_map>

#include "logfix/util.hpp"

namespace logfix {

namespace {

enum class Op { kEqual, kDelete, kInsert };

std::vector<int> intern(const std::vector<std::string>& lines,
                        std::unordered_map<std::string, int>& ids) {
  std::vector<int> out;
  out.reserve(lines.size());
  for (const auto& l : lines) {
    auto [it, inserted] = ids.emplace(l, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

// Myers' greedy forward search with per-step snapshots for traceback.
std::vector<Op> myers(const std::vector<int>& a, const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int max = n + m;
  const int offset = max + 1;
  std::vector<int> v(2 * max + 3, 0);
  std::vector<std::vector<int>> trace;
  int final_d = 0;
  bool done = false;
  for (int d = 0; d <= max && !done; ++d) {
    // Diagonals -d-1..d+1 of the previous step are all the traceback reads.
    trace.emplace_back(v.begin() + (offset - d - 1), v.begin() + (offset + d + 2));
    for (int k = -d; k <= d; k += 2) {
      int x;
      if (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1])) {
        x = v[offset + k + 1];
      } else {
        x = v[offset + k - 1] + 1;
      }
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[offset + k] = x;
      if (x >= n && y >= m) {
        final_d = d;
        done = true;
        break;
      }
    }
  }

  std::vector<Op> ops;
  int x = n;
  int y = m;
  for (int d = final_d; d > 0; --d) {
    const auto& pv = trace[d];
    const auto at = [&](int diag) { return pv[diag + d + 1]; };
    const int k = x - y;
    int prev_k;
    if (k == -d || (k != d && at(k - 1) < at(k + 1))) {
      prev_k = k + 1;
    } else {
      prev_k = k - 1;
    }
    const int prev_x = at(prev_k);
    const int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) {
      ops.push_back(Op::kEqual);
      --x;
      --y;
    }
    ops.push_back(x == prev_x ? Op::kInsert : Op::kDelete);
    x = prev_x;
    y = prev_y;
  }
  while (x > 0 && y > 0) {
    ops.push_back(Op::kEqual);
    --x;
    --y;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

}  // namespace

std::vector<LineEdit> diff_lines(std::string_view before, std::string_view after) {
  std::unordered_map<std::string, int> ids;
  const auto a = intern(split_lines(before), ids);
  const auto b = intern(split_lines(after), ids);
  const auto ops = myers(a, b);

  std::vector<LineEdit> edits;
  std::vector<int> dels;
  std::vector<int> adds;
  auto flush = [&] {
    const std::size_t pairs = std::min(dels.size(), adds.size());
    for (std::size_t i = 0; i < pairs; ++i) {
      edits.push_back({EditKind::kModify, dels[i], adds[i]});
    }
    for (std::size_t i = pairs; i < dels.size(); ++i) {
      edits.push_back({EditKind::kDelete, dels[i], std::nullopt});
    }
    for (std::size_t i = pairs; i < adds.size(); ++i) {
      edits.push_back({EditKind::kAdd, std::nullopt, adds[i]});
    }
    dels.clear();
    adds.clear();
  };

  int line_a = 0;
  int line_b = 0;
  for (Op op : ops) {
    switch (op) {
      case Op::kEqual:
        flush();
        ++line_a;
        ++line_b;
        break;
      case Op::kDelete:
        dels.push_back(++line_a);
        break;
      case Op::kInsert:
        adds.push_back(++line_b);
        break;
    }
  }
  flush();
  return edits;
}

}  // namespace logfix
