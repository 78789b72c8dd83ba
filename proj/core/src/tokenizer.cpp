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

#include <algorithm>
#include <cctype>

#include "logfix/util.hpp"

namespace logfix {

namespace {

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$';
}
bool lower_or_digit(char c) {
  return std::islower(static_cast<unsigned char>(c)) != 0 || std::isdigit(static_cast<unsigned char>(c)) != 0;
}
bool upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void split_part(std::string_view part, std::vector<std::string>& out) {
  std::size_t start = 0;
  for (std::size_t i = 1; i <= part.size(); ++i) {
    bool boundary = i == part.size();
    if (!boundary) {
      const char a = part[i - 1];
      const char b = part[i];
      boundary = (lower_or_digit(a) && upper(b) && !digit(a)) || (digit(a) != digit(b)) ||
                 (upper(a) && upper(b) && i + 1 < part.size() &&
                  std::islower(static_cast<unsigned char>(part[i + 1])));
    }
    if (boundary) {
      if (i > start) out.push_back(to_lower(part.substr(start, i - start)));
      start = i;
    }
  }
}

void emit_word(std::string_view run, bool in_string, std::vector<std::string>& out) {
  if (in_string) {
    std::size_t letters = 0;
    bool caps = true;
    for (char c : run) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        ++letters;
        caps = caps && upper(c);
      }
    }
    if (caps && letters >= 2) out.emplace_back(kCapsToken);
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= run.size(); ++i) {
    if (i == run.size() || run[i] == '_' || run[i] == '$') {
      if (i > start) split_part(run.substr(start, i - start), out);
      start = i + 1;
    }
  }
}

}  // namespace

std::vector<std::string> segment_code(std::string_view text) {
  std::vector<std::string> out;
  bool in_string = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (word_char(c)) {
      const std::size_t start = i;
      while (i < text.size() && word_char(text[i])) ++i;
      emit_word(text.substr(start, i - start), in_string, out);
    } else if (in_string && c == '\\' && i + 1 < text.size()) {
      out.emplace_back(1, c);
      // An escaped quote or backslash never closes the literal.
      if (text[i + 1] == '"' || text[i + 1] == '\\') {
        out.emplace_back(1, text[i + 1]);
        i += 2;
      } else {
        ++i;
      }
    } else if (c == '\'' && !in_string) {
      // Character literal: '"' must not open a string.
      const std::size_t close = text.find('\'', i + (i + 1 < text.size() && text[i + 1] == '\\' ? 3 : 2));
      const std::size_t end = close == std::string_view::npos || close - i > 8 ? i + 1 : close + 1;
      out.emplace_back(1, c);
      for (std::size_t k = i + 1; k < end; ++k) {
        if (!std::isspace(static_cast<unsigned char>(text[k]))) out.emplace_back(1, text[k]);
      }
      i = end;
    } else {
      if (c == '"') in_string = !in_string;
      out.emplace_back(1, c);
      ++i;
    }
  }
  return out;
}

Vocabulary::Vocabulary(std::vector<std::string> known) : known_(std::move(known)) {
  for (std::size_t i = 0; i < known_.size(); ++i) {
    ids_.emplace(known_[i], kOovBuckets + static_cast<int>(i));
  }
}

Vocabulary Vocabulary::build(const std::vector<std::string>& texts, std::size_t min_count) {
  std::map<std::string, std::size_t, std::less<>> counts;
  for (const auto& t : texts) {
    for (auto& tok : segment_code(t)) ++counts[std::move(tok)];
  }
  std::vector<std::string> known;
  for (const auto& [tok, n] : counts) {
    if (n >= min_count) known.push_back(tok);
  }
  return Vocabulary(std::move(known));
}

int Vocabulary::id(std::string_view token) const {
  auto it = ids_.find(token);
  if (it != ids_.end()) return it->second;
  return static_cast<int>(fnv1a64(token) % static_cast<std::uint64_t>(kOovBuckets));
}

TokenSequence tokenize(std::string_view text, const Vocabulary& vocab, std::size_t max_tokens) {
  TokenSequence seq;
  const auto pieces = segment_code(text);
  const std::size_t n = std::min(pieces.size(), max_tokens);
  seq.truncated = pieces.size() > max_tokens;
  seq.tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) seq.tokens.push_back(vocab.id(pieces[i]));
  return seq;
}

}  // namespace logfix
