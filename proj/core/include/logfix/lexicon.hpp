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

// Word lists used by the mutation operators: known misspellings, verb
// inflections and event-word antonyms. Bundled copies are compiled in; each
// can be replaced by a user file in the same tab-separated format.

#ifndef LOGFIX_LEXICON_HPP_
#define LOGFIX_LEXICON_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace logfix {

class TypoLexicon {
 public:
  // Lines: word <TAB> misspelling[,misspelling...]; '#' starts a comment.
  static TypoLexicon parse(std::string_view tsv);
  static TypoLexicon load(const std::string& path);
  static const TypoLexicon& builtin();

  // Misspellings of a lowercase word, or nullptr.
  const std::vector<std::string>* misspellings(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::vector<std::string>, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

enum class VerbTense { kBase, kPast, kPastParticiple, kPresentParticiple, kThirdPerson };

std::string_view tense_name(VerbTense tense);

struct VerbForms {
  std::string base;
  std::string past;
  std::string past_participle;
  std::string present_participle;
  std::string third_person;

  const std::string& get(VerbTense tense) const;
};

// Suffix-rule inflection for regular verbs.
VerbForms regular_forms(std::string_view lemma);

class VerbLexicon {
 public:
  struct Reading {
    std::string lemma;
    VerbTense tense;
  };

  // verbs: lemma, or lemma <TAB> past <TAB> pp <TAB> ing <TAB> third.
  // stopwords: one word per line; never read as verbs.
  static VerbLexicon parse(std::string_view verbs, std::string_view stopwords);
  static VerbLexicon load(const std::string& verbs_path, const std::string& stopwords_path);
  static const VerbLexicon& builtin();

  // Every verb reading of a lowercase word, in tense enum order. Empty for
  // unknown words and stop words.
  std::vector<Reading> readings(std::string_view word) const;
  const VerbForms* forms(std::string_view lemma) const;
  bool is_stopword(std::string_view word) const;
  std::size_t size() const { return lemmas_.size(); }

 private:
  std::map<std::string, VerbForms, std::less<>> lemmas_;
  std::map<std::string, std::vector<Reading>, std::less<>> index_;
  std::set<std::string, std::less<>> stopwords_;
};

class AntonymTable {
 public:
  // Lines: word <TAB> antonym. Both directions are registered; the first
  // mapping seen for a word wins.
  static AntonymTable parse(std::string_view tsv);
  static AntonymTable load(const std::string& path);
  static const AntonymTable& builtin();

  // Antonym of a lowercase word, or nullptr.
  const std::string* antonym(std::string_view word) const;
  std::size_t size() const { return pairs_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> pairs_;
};

// Bundled defect definition paragraph for a label name such as "TEMPORAL".
std::string defect_definition(std::string_view label_name);

}  // namespace logfix

#endif  // LOGFIX_LEXICON_HPP_
