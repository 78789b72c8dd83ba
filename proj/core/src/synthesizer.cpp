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

#include "logfix/synthesizer.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "logfix/error.hpp"
#include "logfix/prompts.hpp"
#include "logfix/util.hpp"

namespace logfix {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

bool all_upper(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return !is_alpha(c) || is_upper(c); });
}

// Transfers the case pattern of `pattern` onto `word`.
std::string apply_case(std::string_view pattern, std::string_view word) {
  std::string out(word);
  if (pattern.size() > 1 && all_upper(pattern)) return to_upper(out);
  if (!pattern.empty() && is_upper(pattern[0]) && !out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

std::string random_edit(std::string_view word, Rng& rng) {
  std::string out(word);
  const bool upper = word.size() > 1 && all_upper(word);
  auto random_letter = [&](char avoid) {
    char c;
    do {
      c = static_cast<char>('a' + rng.index(26));
      if (upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    } while (std::tolower(static_cast<unsigned char>(c)) == std::tolower(static_cast<unsigned char>(avoid)));
    return c;
  };
  std::size_t op = rng.index(3);  // 0 add, 1 delete, 2 change
  if (op == 1 && out.size() < 2) op = rng.index(2) == 0 ? 0 : 2;
  switch (op) {
    case 0: {
      const std::size_t at = rng.index(out.size() + 1);
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), random_letter('\0'));
      break;
    }
    case 1:
      out.erase(rng.index(out.size()), 1);
      break;
    default: {
      const std::size_t at = rng.index(out.size());
      const char c = random_letter(out[at]);
      // Keep the case of the replaced letter.
      out[at] = is_upper(out[at]) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                  : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      break;
    }
  }
  return out;
}

Mutation finish(const LoggingStatement& stmt, const std::string& raw, MutationStrategy strategy,
                std::string detail, const ParserConfig& config) {
  Mutation m;
  m.statement = restatement(stmt, raw, config);
  m.record = {strategy, stmt.raw_text, m.statement.raw_text, std::move(detail)};
  return m;
}

std::vector<WordSpan> words_of(const LoggingStatement& stmt) {
  if (stmt.parse_degraded) return {};
  return message_words(stmt.static_text, stmt.placeholders);
}

// "retryCount" -> "retry count"
std::string describe_identifier(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (!std::isalnum(static_cast<unsigned char>(c))) {
      if (!out.empty() && out.back() != ' ') out += ' ';
      continue;
    }
    if (is_upper(c) && i > 0 && !out.empty() && out.back() != ' ' &&
        (!is_upper(name[i - 1]) || (i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]))))) {
      out += ' ';
    }
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return trim(out);
}

std::optional<Mutation> semantic_from_backend(const LoggingStatement& stmt,
                                              const MethodContext& context, DefectLabel kind,
                                              const MutationResources& res) {
  const std::string prompt = build_mutator_prompt(stmt, context, kind);
  const double temperature = res.backend->capabilities().supports_temperature ? 0.0 : 1.0;
  const std::string reply = res.backend->complete(prompt, 256, temperature);
  const auto text = parse_mutator_reply(reply);
  if (!text) return std::nullopt;
  const auto parsed = parse_statement(*text, res.parser);
  if (!parsed || parsed->raw_text == stmt.raw_text) return std::nullopt;
  const auto strategy = kind == DefectLabel::kStatementCode
                            ? MutationStrategy::kSemanticStatementCode
                            : MutationStrategy::kSemanticStaticDynamic;
  return finish(stmt, parsed->raw_text, strategy, "backend rewrite", res.parser);
}

Mutation statement_code_fallback(const LoggingStatement& stmt, const AntonymTable& antonyms,
                                 Rng& rng, const ParserConfig& config) {
  struct Candidate {
    WordSpan span;
    std::string replacement;
  };
  std::vector<Candidate> candidates;
  for (const auto& w : words_of(stmt)) {
    const std::string word = stmt.static_text.substr(w.offset, w.length);
    if (const std::string* a = antonyms.antonym(to_lower(word))) {
      candidates.push_back({w, apply_case(word, *a)});
    }
  }
  if (candidates.empty()) {
    throw Error(ErrorKind::kNoCandidate, "no event word with a known antonym");
  }
  const auto& c = candidates[rng.index(candidates.size())];
  const std::string before = stmt.static_text.substr(c.span.offset, c.span.length);
  return finish(stmt, splice_static(stmt, c.span.offset, c.span.length, c.replacement),
                MutationStrategy::kSemanticStatementCode, before + " -> " + c.replacement, config);
}

Mutation static_dynamic_fallback(const LoggingStatement& stmt, const MethodContext& context,
                                 Rng& rng, const ParserConfig& config) {
  const auto scope = in_scope_variables(context);
  std::set<std::string> logged;
  for (const auto& v : stmt.variables) logged.insert(trim(v));

  std::vector<std::string> swaps;
  for (const auto& name : scope) {
    if (!logged.contains(name) && !config.logger_receivers.contains(name)) swaps.push_back(name);
  }
  if (!stmt.parse_degraded && !stmt.variables.empty() && !swaps.empty()) {
    const std::size_t vi = rng.index(stmt.variables.size());
    const std::string& repl = swaps[rng.index(swaps.size())];
    return finish(stmt, splice_variable(stmt, vi, repl), MutationStrategy::kSemanticStaticDynamic,
                  trim(stmt.variables[vi]) + " -> " + repl, config);
  }

  // Describe a placeholder with another variable's name instead.
  struct Candidate {
    WordSpan span;
    std::string description;
  };
  std::vector<Candidate> candidates;
  const auto words = words_of(stmt);
  for (std::size_t p = 0; p < stmt.placeholders.size(); ++p) {
    const auto& ph = stmt.placeholders[p];
    const WordSpan* before = nullptr;
    for (const auto& w : words) {
      if (w.offset + w.length <= ph.offset) before = &w;
    }
    if (before == nullptr || ph.offset - (before->offset + before->length) > 3) continue;
    const std::string word = to_lower(stmt.static_text.substr(before->offset, before->length));
    const std::string own = p < stmt.variables.size() ? trim(stmt.variables[p]) : "";
    for (const auto& name : scope) {
      if (name == own || config.logger_receivers.contains(name)) continue;
      const std::string desc = describe_identifier(name);
      if (desc.empty() || desc == word) continue;
      candidates.push_back({*before, desc});
    }
  }
  if (candidates.empty()) {
    throw Error(ErrorKind::kNoCandidate, "no other in-scope variable to swap in");
  }
  const auto& c = candidates[rng.index(candidates.size())];
  const std::string before = stmt.static_text.substr(c.span.offset, c.span.length);
  return finish(stmt, splice_static(stmt, c.span.offset, c.span.length, c.description),
                MutationStrategy::kSemanticStaticDynamic, before + " -> " + c.description, config);
}

}  // namespace

std::vector<WordSpan> message_words(std::string_view text, const std::vector<Placeholder>& placeholders) {
  std::vector<bool> masked(text.size(), false);
  for (const auto& p : placeholders) {
    for (std::size_t k = p.offset; k < std::min(text.size(), p.offset + p.marker.size()); ++k) {
      masked[k] = true;
    }
  }
  std::vector<WordSpan> words;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (masked[i]) {
      ++i;
    } else if (c == '\\') {
      i += (i + 1 < text.size() && text[i + 1] == 'u') ? 6 : 2;
    } else if (c == '%') {
      i += 2;
    } else if (is_alpha(c)) {
      const std::size_t start = i;
      while (i < text.size() && is_alpha(text[i]) && !masked[i]) ++i;
      words.push_back({start, i - start});
    } else {
      ++i;
    }
  }
  return words;
}

LoggingStatement restatement(const LoggingStatement& original, const std::string& raw,
                             const ParserConfig& config) {
  auto parsed = parse_statement(raw, config);
  if (!parsed) throw Error(ErrorKind::kDataError, "mutated text does not parse: " + raw);
  LoggingStatement st = std::move(*parsed);
  st.location = original.location;
  st.location.end_line = original.location.start_line +
                         static_cast<int>(std::count(raw.begin(), raw.end(), '\n'));
  st.method_id = original.method_id;
  st.id = statement_id(st.location.path, st.location.start_line, st.location.end_line, st.raw_text);
  return st;
}

Mutation mutate_typo(const LoggingStatement& stmt, const TypoLexicon& lexicon, std::uint64_t seed,
                     const ParserConfig& config) {
  const auto words = words_of(stmt);
  if (words.empty()) throw Error(ErrorKind::kNoMutableWord, "no word in static text");
  Rng rng(seed);
  const auto& w = words[rng.index(words.size())];
  const std::string word = stmt.static_text.substr(w.offset, w.length);
  std::string typo;
  if (const auto* known = lexicon.misspellings(to_lower(word))) {
    typo = apply_case(word, (*known)[rng.index(known->size())]);
  }
  if (typo.empty() || typo == word) typo = random_edit(word, rng);
  return finish(stmt, splice_static(stmt, w.offset, w.length, typo), MutationStrategy::kTypo,
                word + " -> " + typo, config);
}

Mutation mutate_capitalization(const LoggingStatement& stmt, std::uint64_t seed,
                               const ParserConfig& config) {
  std::vector<WordSpan> eligible;
  for (const auto& w : words_of(stmt)) {
    if (!all_upper(std::string_view(stmt.static_text).substr(w.offset, w.length))) eligible.push_back(w);
  }
  if (eligible.empty()) throw Error(ErrorKind::kNoMutableWord, "no lowercase word in static text");
  Rng rng(seed);
  const auto& w = eligible[rng.index(eligible.size())];
  const std::string word = stmt.static_text.substr(w.offset, w.length);
  const std::string upper = to_upper(word);
  return finish(stmt, splice_static(stmt, w.offset, w.length, upper),
                MutationStrategy::kCapitalization, word + " -> " + upper, config);
}

Mutation mutate_readability(const LoggingStatement& stmt, const MutationResources& res,
                            std::uint64_t seed) {
  Rng rng(seed);
  const bool typo_first = rng.uniform() < res.typo_share;
  const std::uint64_t sub = mix_seed(seed, 1);
  auto typo = [&] { return mutate_typo(stmt, *res.typos, sub, res.parser); };
  auto caps = [&] { return mutate_capitalization(stmt, sub, res.parser); };
  try {
    return typo_first ? typo() : caps();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNoMutableWord) throw;
    return typo_first ? caps() : typo();
  }
}

std::optional<MainVerb> identify_main_verb(std::string_view static_text, const VerbLexicon& lexicon) {
  const auto words = message_words(static_text);
  std::vector<std::vector<VerbLexicon::Reading>> readings;
  readings.reserve(words.size());
  for (const auto& w : words) readings.push_back(lexicon.readings(to_lower(static_text.substr(w.offset, w.length))));

  auto find_tense = [&](std::size_t idx, std::initializer_list<VerbTense> order) -> std::optional<MainVerb> {
    for (VerbTense t : order) {
      for (const auto& r : readings[idx]) {
        if (r.tense == t) return MainVerb{idx, r.lemma, t};
      }
    }
    return std::nullopt;
  };
  if (words.empty()) return std::nullopt;

  // Leading gerund or participle, then a leading imperative.
  if (auto v = find_tense(0, {VerbTense::kPresentParticiple, VerbTense::kPast, VerbTense::kPastParticiple})) return v;
  if (auto v = find_tense(0, {VerbTense::kBase})) return v;
  // Otherwise the first inflected form, then third person, then base.
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (auto v = find_tense(i, {VerbTense::kPresentParticiple, VerbTense::kPast, VerbTense::kPastParticiple})) return v;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (auto v = find_tense(i, {VerbTense::kThirdPerson})) return v;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (auto v = find_tense(i, {VerbTense::kBase})) return v;
  }
  return std::nullopt;
}

std::optional<Mutation> mutate_tense(const LoggingStatement& stmt, const VerbLexicon& lexicon,
                                     std::uint64_t seed, const ParserConfig& config) {
  if (stmt.parse_degraded) return std::nullopt;
  const auto verb = identify_main_verb(stmt.static_text, lexicon);
  if (!verb) return std::nullopt;
  const auto words = message_words(stmt.static_text);
  const auto& w = words[verb->token_index];
  const std::string word = stmt.static_text.substr(w.offset, w.length);
  const VerbForms* forms = lexicon.forms(verb->lemma);
  if (forms == nullptr) return std::nullopt;

  std::vector<std::string> options;
  for (VerbTense t : {VerbTense::kBase, VerbTense::kPast, VerbTense::kPastParticiple,
                      VerbTense::kPresentParticiple, VerbTense::kThirdPerson}) {
    const std::string& f = forms->get(t);
    if (f.find(' ') != std::string::npos || f == to_lower(word)) continue;
    if (std::find(options.begin(), options.end(), f) == options.end()) options.push_back(f);
  }
  if (options.empty()) return std::nullopt;
  Rng rng(seed);
  const std::string replacement = apply_case(word, options[rng.index(options.size())]);
  return finish(stmt, splice_static(stmt, w.offset, w.length, replacement), MutationStrategy::kTense,
                word + " -> " + replacement, config);
}

Mutation mutate_semantic(const LoggingStatement& stmt, const MethodContext& context,
                         DefectLabel kind, const MutationResources& res, std::uint64_t seed) {
  if (kind != DefectLabel::kStatementCode && kind != DefectLabel::kStaticDynamic) {
    throw Error(ErrorKind::kConfigError, "semantic mutation needs STATEMENT_CODE or STATIC_DYNAMIC");
  }
  if (res.backend != nullptr) {
    if (auto m = semantic_from_backend(stmt, context, kind, res)) return *m;
  }
  Rng rng(seed);
  if (kind == DefectLabel::kStatementCode) {
    return statement_code_fallback(stmt, *res.antonyms, rng, res.parser);
  }
  return static_dynamic_fallback(stmt, context, rng, res.parser);
}

std::vector<LabeledSample> clean_samples(const std::vector<MethodWithStatements>& methods) {
  std::vector<LabeledSample> out;
  for (const auto& m : methods) {
    for (const auto& st : m.statements) {
      if (st.parse_degraded) continue;
      LabeledSample s;
      s.context = m.context;
      s.target = st;
      s.label = DefectLabel::kNonDefect;
      s.provenance.kind = ProvenanceKind::kWellMaintained;
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<LabeledSample> synthesize_corpus(const std::vector<LabeledSample>& clean,
                                             std::size_t per_type_count, std::uint64_t seed,
                                             const MutationResources& res) {
  std::vector<LabeledSample> out;
  if (per_type_count == 0) return out;
  for (const auto& s : clean) {
    if (s.label != DefectLabel::kNonDefect) {
      throw Error(ErrorKind::kDataError, "synthesis input must be NON_DEFECT samples");
    }
  }

  static constexpr DefectLabel kTypes[] = {DefectLabel::kStatementCode, DefectLabel::kStaticDynamic,
                                           DefectLabel::kTemporal, DefectLabel::kReadability};
  static constexpr std::size_t kMaxRounds = 64;
  std::set<std::string> seen;
  const std::size_t n = clean.size();

  for (std::size_t t = 0; t < 4; ++t) {
    const DefectLabel label = kTypes[t];
    const std::uint64_t type_seed = mix_seed(seed, t + 1);
    std::size_t produced = 0;
    for (std::size_t round = 0; produced < per_type_count; ++round) {
      if (round == kMaxRounds) break;
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      Rng shuffler(mix_seed(type_seed, round));
      shuffler.shuffle(order);
      std::size_t added = 0;
      for (std::size_t idx : order) {
        if (produced == per_type_count) break;
        const auto& sample = clean[idx];
        const std::uint64_t sample_seed = mix_seed(type_seed, (round + 1) * 0x100000000ULL + idx);
        std::optional<Mutation> m;
        try {
          switch (label) {
            case DefectLabel::kStatementCode:
            case DefectLabel::kStaticDynamic:
              m = mutate_semantic(sample.target, sample.context, label, res, sample_seed);
              break;
            case DefectLabel::kTemporal:
              m = mutate_tense(sample.target, *res.verbs, sample_seed, res.parser);
              break;
            default:
              m = mutate_readability(sample.target, res, sample_seed);
              break;
          }
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::kBackendError) throw;
          continue;
        }
        if (!m || m->statement.raw_text == sample.target.raw_text) continue;

        LabeledSample mutated;
        mutated.context = replace_statement(sample.context, sample.target, m->statement);
        mutated.target = m->statement;
        mutated.label = label;
        mutated.provenance.kind = ProvenanceKind::kMutated;
        mutated.provenance.strategy = m->record.strategy;
        mutated.provenance.original_raw_text = sample.target.raw_text;
        if (!seen.insert(mutated.context.source_text + '\x1f' + mutated.target.raw_text).second) continue;
        out.push_back(std::move(mutated));
        ++produced;
        ++added;
      }
      if (added == 0) break;
    }
    if (produced < per_type_count) {
      throw Error(ErrorKind::kInsufficientInputs,
                  std::string(label_name(label)) + ": produced " + std::to_string(produced) +
                      " of " + std::to_string(per_type_count) + " samples");
    }
  }
  return out;
}

}  // namespace logfix
