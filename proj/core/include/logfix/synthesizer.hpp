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

// Mutation operators that turn clean logging statements into labeled
// defective ones, and corpus-level synthesis with deduplication.

#ifndef LOGFIX_SYNTHESIZER_HPP_
#define LOGFIX_SYNTHESIZER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logfix/lexicon.hpp"
#include "logfix/llm.hpp"
#include "logfix/model.hpp"
#include "logfix/source_parser.hpp"

namespace logfix {

struct MutationRecord {
  MutationStrategy strategy = MutationStrategy::kTypo;
  std::string original;  // raw text before
  std::string mutated;   // raw text after
  std::string detail;    // e.g. "executor -> executer"
};

struct Mutation {
  LoggingStatement statement;
  MutationRecord record;
};

// Alphabetic runs of a static text, skipping placeholder markers and the
// character after a backslash or percent sign.
struct WordSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};
std::vector<WordSpan> message_words(std::string_view static_text,
                                    const std::vector<Placeholder>& placeholders = {});

struct MutationResources {
  const TypoLexicon* typos = &TypoLexicon::builtin();
  const VerbLexicon* verbs = &VerbLexicon::builtin();
  const AntonymTable* antonyms = &AntonymTable::builtin();
  ParserConfig parser;
  // Optional. When set, semantic mutations ask the backend first and fall
  // back to the deterministic rules on an unusable reply.
  LlmBackend* backend = nullptr;
  double typo_share = 0.5;  // typo vs. capitalization within READABILITY
};

// One misspelled word: a known misspelling when the word is in the lexicon,
// otherwise one random character insertion, deletion or substitution.
Mutation mutate_typo(const LoggingStatement& stmt, const TypoLexicon& lexicon,
                     std::uint64_t seed, const ParserConfig& config = {});
// One word that is not already uppercase is uppercased.
Mutation mutate_capitalization(const LoggingStatement& stmt, std::uint64_t seed,
                               const ParserConfig& config = {});
// Typo or capitalization, chosen by the seed. Throws Error(kNoMutableWord).
Mutation mutate_readability(const LoggingStatement& stmt, const MutationResources& res,
                            std::uint64_t seed);

struct MainVerb {
  std::size_t token_index = 0;  // index into message_words()
  std::string lemma;
  VerbTense tense = VerbTense::kBase;
};

std::optional<MainVerb> identify_main_verb(std::string_view static_text, const VerbLexicon& lexicon);

// Main verb rewritten to a different form of its lemma, chosen uniformly.
std::optional<Mutation> mutate_tense(const LoggingStatement& stmt, const VerbLexicon& lexicon,
                                     std::uint64_t seed, const ParserConfig& config = {});

// kind must be kStatementCode or kStaticDynamic. Throws Error(kNoCandidate)
// when no rule applies and Error(kBackendError) on transport failures.
Mutation mutate_semantic(const LoggingStatement& stmt, const MethodContext& context,
                         DefectLabel kind, const MutationResources& res, std::uint64_t seed);

// Builds a statement from mutated raw text, keeping the original's location
// and method. Throws Error(kDataError) if the text no longer parses.
LoggingStatement restatement(const LoggingStatement& original, const std::string& raw,
                             const ParserConfig& config);

// Clean samples extracted from methods: one WELL_MAINTAINED sample per
// parsed statement.
std::vector<LabeledSample> clean_samples(const std::vector<MethodWithStatements>& methods);

// per_type_count samples for each of the four defect types, in the order
// STATEMENT_CODE, STATIC_DYNAMIC, TEMPORAL, READABILITY. Throws
// Error(kInsufficientInputs) when a type cannot reach the count.
std::vector<LabeledSample> synthesize_corpus(const std::vector<LabeledSample>& clean,
                                             std::size_t per_type_count, std::uint64_t seed,
                                             const MutationResources& res = {});

}  // namespace logfix

#endif  // LOGFIX_SYNTHESIZER_HPP_
