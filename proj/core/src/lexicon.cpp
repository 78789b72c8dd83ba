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

#include "logfix/lexicon.hpp"

#include <algorithm>

#include "logfix/data.hpp"
#include "logfix/error.hpp"
#include "logfix/util.hpp"

namespace logfix {

namespace {

// Non-blank, non-comment lines split on tabs.
std::vector<std::vector<std::string>> table_rows(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& raw : split_lines(text)) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      cols.push_back(trim(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start)));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    rows.push_back(std::move(cols));
  }
  return rows;
}

bool is_vowel(char c) { return std::string_view("aeiou").find(c) != std::string_view::npos; }

}  // namespace

TypoLexicon TypoLexicon::parse(std::string_view tsv) {
  TypoLexicon lex;
  for (const auto& row : table_rows(tsv)) {
    if (row.size() != 2 || row[0].empty()) {
      throw Error(ErrorKind::kDataError, "typo lexicon: expected 'word<TAB>misspellings'");
    }
    const std::string word = to_lower(row[0]);
    auto& list = lex.entries_[word];
    std::size_t start = 0;
    while (start <= row[1].size()) {
      auto comma = row[1].find(',', start);
      if (comma == std::string::npos) comma = row[1].size();
      const std::string m = trim(row[1].substr(start, comma - start));
      if (!m.empty() && to_lower(m) != word &&
          std::find(list.begin(), list.end(), m) == list.end()) {
        list.push_back(m);
      }
      start = comma + 1;
    }
    if (list.empty()) lex.entries_.erase(word);
  }
  return lex;
}

TypoLexicon TypoLexicon::load(const std::string& path) { return parse(read_file(path)); }

const TypoLexicon& TypoLexicon::builtin() {
  static const TypoLexicon kLexicon = parse(embedded_data("typos.tsv"));
  return kLexicon;
}

const std::vector<std::string>* TypoLexicon::misspellings(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string_view tense_name(VerbTense tense) {
  switch (tense) {
    case VerbTense::kBase: return "BASE";
    case VerbTense::kPast: return "PAST";
    case VerbTense::kPastParticiple: return "PAST_PARTICIPLE";
    case VerbTense::kPresentParticiple: return "PRESENT_PARTICIPLE";
    case VerbTense::kThirdPerson: return "THIRD_PERSON";
  }
  return "?";
}

const std::string& VerbForms::get(VerbTense tense) const {
  switch (tense) {
    case VerbTense::kBase: return base;
    case VerbTense::kPast: return past;
    case VerbTense::kPastParticiple: return past_participle;
    case VerbTense::kPresentParticiple: return present_participle;
    case VerbTense::kThirdPerson: return third_person;
  }
  return base;
}

VerbForms regular_forms(std::string_view lemma) {
  const std::string w = to_lower(lemma);
  VerbForms f;
  f.base = w;
  const std::size_t n = w.size();
  const char last = n > 0 ? w[n - 1] : '\0';
  const char prev = n > 1 ? w[n - 2] : '\0';
  const bool consonant_y = last == 'y' && n > 1 && !is_vowel(prev);
  const bool ends_with = n > 0;
  auto has_suffix = [&](std::string_view s) {
    return w.size() >= s.size() && std::string_view(w).substr(w.size() - s.size()) == s;
  };

  if (consonant_y) {
    f.third_person = w.substr(0, n - 1) + "ies";
  } else if (has_suffix("s") || has_suffix("x") || has_suffix("z") || has_suffix("ch") ||
             has_suffix("sh") || has_suffix("o")) {
    f.third_person = w + "es";
  } else {
    f.third_person = w + "s";
  }

  if (ends_with && last == 'e') {
    f.past = w + "d";
  } else if (consonant_y) {
    f.past = w.substr(0, n - 1) + "ied";
  } else {
    f.past = w + "ed";
  }
  f.past_participle = f.past;

  if (has_suffix("ie")) {
    f.present_participle = w.substr(0, n - 2) + "ying";
  } else if (last == 'e' && !has_suffix("ee") && !has_suffix("ye") && !has_suffix("oe") && n > 2) {
    f.present_participle = w.substr(0, n - 1) + "ing";
  } else {
    f.present_participle = w + "ing";
  }
  return f;
}

VerbLexicon VerbLexicon::parse(std::string_view verbs, std::string_view stopwords) {
  VerbLexicon lex;
  for (const auto& row : table_rows(stopwords)) {
    if (!row.empty() && !row[0].empty()) lex.stopwords_.insert(to_lower(row[0]));
  }
  for (const auto& row : table_rows(verbs)) {
    if (row.empty() || row[0].empty()) continue;
    const std::string lemma = to_lower(row[0]);
    if (lex.lemmas_.contains(lemma)) continue;
    VerbForms f;
    if (row.size() == 1) {
      f = regular_forms(lemma);
    } else if (row.size() == 5) {
      f = {lemma, to_lower(row[1]), to_lower(row[2]), to_lower(row[3]), to_lower(row[4])};
    } else {
      throw Error(ErrorKind::kDataError, "verb lexicon: bad row for '" + lemma + "'");
    }
    if (f.past.empty() || f.past_participle.empty() || f.present_participle.empty() ||
        f.third_person.empty()) {
      throw Error(ErrorKind::kDataError, "verb lexicon: empty form for '" + lemma + "'");
    }
    lex.lemmas_[lemma] = f;
    for (VerbTense t : {VerbTense::kBase, VerbTense::kPast, VerbTense::kPastParticiple,
                        VerbTense::kPresentParticiple, VerbTense::kThirdPerson}) {
      const std::string& form = f.get(t);
      if (form.find(' ') != std::string::npos) continue;
      auto& readings = lex.index_[form];
      readings.push_back({lemma, t});
    }
  }
  return lex;
}

VerbLexicon VerbLexicon::load(const std::string& verbs_path, const std::string& stopwords_path) {
  return parse(read_file(verbs_path),
               stopwords_path.empty() ? std::string() : read_file(stopwords_path));
}

const VerbLexicon& VerbLexicon::builtin() {
  static const VerbLexicon kLexicon =
      parse(embedded_data("verbs.tsv"), embedded_data("verb_stopwords.txt"));
  return kLexicon;
}

std::vector<VerbLexicon::Reading> VerbLexicon::readings(std::string_view word) const {
  if (stopwords_.contains(word)) return {};
  auto it = index_.find(word);
  if (it == index_.end()) return {};
  return it->second;
}

const VerbForms* VerbLexicon::forms(std::string_view lemma) const {
  auto it = lemmas_.find(lemma);
  return it == lemmas_.end() ? nullptr : &it->second;
}

bool VerbLexicon::is_stopword(std::string_view word) const { return stopwords_.contains(word); }

AntonymTable AntonymTable::parse(std::string_view tsv) {
  AntonymTable table;
  for (const auto& row : table_rows(tsv)) {
    if (row.size() != 2 || row[0].empty() || row[1].empty()) {
      throw Error(ErrorKind::kDataError, "antonym table: expected 'word<TAB>antonym'");
    }
    const std::string a = to_lower(row[0]);
    const std::string b = to_lower(row[1]);
    if (a == b) continue;
    table.pairs_.try_emplace(a, b);
    table.pairs_.try_emplace(b, a);
  }
  return table;
}

AntonymTable AntonymTable::load(const std::string& path) { return parse(read_file(path)); }

const AntonymTable& AntonymTable::builtin() {
  static const AntonymTable kTable = parse(embedded_data("antonyms.tsv"));
  return kTable;
}

const std::string* AntonymTable::antonym(std::string_view word) const {
  auto it = pairs_.find(word);
  return it == pairs_.end() ? nullptr : &it->second;
}

std::string defect_definition(std::string_view label_name) {
  const std::string wanted = "[" + std::string(label_name) + "]";
  std::string out;
  bool inside = false;
  for (const auto& line : split_lines(embedded_data("defect_definitions.txt"))) {
    const std::string t = trim(line);
    if (!t.empty() && t[0] == '[') {
      if (inside) break;
      inside = t == wanted;
      continue;
    }
    if (!inside || t.empty() || t[0] == '#') continue;
    if (!out.empty()) out += ' ';
    out += t;
  }
  if (out.empty()) {
    throw Error(ErrorKind::kDataError, "no definition for '" + std::string(label_name) + "'");
  }
  return out;
}

}  // namespace logfix
