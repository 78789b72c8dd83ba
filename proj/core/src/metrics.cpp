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

#include "logfix/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>

#include "logfix/error.hpp"
#include "logfix/util.hpp"

namespace logfix {

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  NgramCounts out;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                   tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return out;
}

std::size_t clipped_overlap(const NgramCounts& cand, const NgramCounts& ref) {
  std::size_t total = 0;
  for (const auto& [gram, count] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) total += std::min(count, it->second);
  }
  return total;
}

double harmonic(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

void require_reference(const std::vector<std::string>& reference) {
  if (reference.empty()) throw Error(ErrorKind::kEmptyReference, "reference has no tokens");
}

}  // namespace

DetectionReport detection_metrics(const std::vector<DefectLabel>& preds,
                                  const std::vector<DefectLabel>& golds) {
  if (preds.size() != golds.size() || preds.empty()) {
    throw Error(ErrorKind::kLengthMismatch, std::to_string(preds.size()) + " predictions for " +
                                                std::to_string(golds.size()) + " gold labels");
  }
  DetectionReport r;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    ++r.confusion[label_index(golds[i])][label_index(preds[i])];
    if (preds[i] == golds[i]) ++correct;
  }
  double f1_sum = 0.0;
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const std::size_t tp = r.confusion[c][c];
    std::size_t predicted = 0;
    std::size_t gold = 0;
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      predicted += r.confusion[k][c];
      gold += r.confusion[c][k];
    }
    auto& s = r.per_class[c];
    s.support = gold;
    s.precision = predicted > 0 ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
    s.recall = gold > 0 ? static_cast<double>(tp) / static_cast<double>(gold) : 0.0;
    s.f1 = harmonic(s.precision, s.recall);
    f1_sum += s.f1;
  }
  r.f1_macro = f1_sum / static_cast<double>(kNumLabels);
  r.accuracy = static_cast<double>(correct) / static_cast<double>(preds.size());
  return r;
}

std::vector<std::string> static_tokens(std::string_view static_text,
                                       const std::vector<Placeholder>& placeholders) {
  std::vector<bool> masked(static_text.size(), false);
  for (const auto& p : placeholders) {
    for (std::size_t k = p.offset; k < std::min(static_text.size(), p.offset + p.marker.size()); ++k) {
      masked[k] = true;
    }
  }
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < static_text.size()) {
    const auto c = static_cast<unsigned char>(static_text[i]);
    if (masked[i] || std::isspace(c)) {
      ++i;
    } else if (std::isalnum(c)) {
      std::string word;
      while (i < static_text.size() && !masked[i] &&
             std::isalnum(static_cast<unsigned char>(static_text[i]))) {
        word += static_cast<char>(std::tolower(static_cast<unsigned char>(static_text[i])));
        ++i;
      }
      out.push_back(std::move(word));
    } else {
      out.emplace_back(1, static_text[i]);
      ++i;
    }
  }
  return out;
}

double bleu(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
            int max_n) {
  require_reference(reference);
  if (max_n < 1) throw Error(ErrorKind::kConfigError, "BLEU order must be positive");
  if (candidate.empty()) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const auto cand = ngrams(candidate, static_cast<std::size_t>(n));
    const auto ref = ngrams(reference, static_cast<std::size_t>(n));
    const std::size_t total = candidate.size() >= static_cast<std::size_t>(n)
                                  ? candidate.size() - static_cast<std::size_t>(n) + 1
                                  : 0;
    const std::size_t matches = clipped_overlap(cand, ref);
    double p;
    if (n == 1) {
      if (matches == 0) return 0.0;
      p = static_cast<double>(matches) / static_cast<double>(total);
    } else if (matches == 0) {
      p = 1.0 / static_cast<double>(total + 1);
    } else {
      p = static_cast<double>(matches) / static_cast<double>(total);
    }
    log_sum += std::log(p);
  }
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
  return bp * std::exp(log_sum / max_n);
}

double rouge_n(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
               int n) {
  require_reference(reference);
  if (n < 1) throw Error(ErrorKind::kConfigError, "ROUGE order must be positive");
  const auto cand = ngrams(candidate, static_cast<std::size_t>(n));
  const auto ref = ngrams(reference, static_cast<std::size_t>(n));
  std::size_t cand_total = 0;
  std::size_t ref_total = 0;
  for (const auto& [g, k] : cand) cand_total += k;
  for (const auto& [g, k] : ref) ref_total += k;
  if (ref_total == 0) return cand_total == 0 ? 1.0 : 0.0;
  if (cand_total == 0) return 0.0;
  const double overlap = static_cast<double>(clipped_overlap(cand, ref));
  return harmonic(overlap / static_cast<double>(cand_total), overlap / static_cast<double>(ref_total));
}

double rouge_l(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  require_reference(reference);
  if (candidate.empty()) return 0.0;
  std::vector<std::size_t> prev(reference.size() + 1, 0);
  std::vector<std::size_t> cur(reference.size() + 1, 0);
  for (const auto& c : candidate) {
    for (std::size_t j = 1; j <= reference.size(); ++j) {
      cur[j] = c == reference[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  const double lcs = static_cast<double>(prev[reference.size()]);
  return harmonic(lcs / static_cast<double>(candidate.size()),
                  lcs / static_cast<double>(reference.size()));
}

Prf variable_prf(const std::vector<std::string>& updated, const std::vector<std::string>& truth) {
  std::set<std::string> ud;
  std::set<std::string> gt;
  for (const auto& v : updated) ud.insert(trim(v));
  for (const auto& v : truth) gt.insert(trim(v));
  if (ud.empty() && gt.empty()) return {1.0, 1.0, 1.0};
  std::size_t common = 0;
  for (const auto& v : ud) common += gt.count(v);
  Prf r;
  r.precision = ud.empty() ? 0.0 : static_cast<double>(common) / static_cast<double>(ud.size());
  r.recall = gt.empty() ? 0.0 : static_cast<double>(common) / static_cast<double>(gt.size());
  r.f1 = harmonic(r.precision, r.recall);
  return r;
}

double improvement_coefficient(double m_origin, double m_updated) {
  constexpr double kEps = 1e-12;
  if (m_origin > 1.0 + kEps) {
    throw Error(ErrorKind::kDegenerateOrigin, "origin metric above 1");
  }
  if (m_origin >= 1.0 - kEps) {
    if (m_updated >= 1.0 - kEps) return 0.0;
    throw Error(ErrorKind::kDegenerateOrigin, "origin already perfect and the update regressed");
  }
  return (m_updated - m_origin) / (1.0 - m_origin);
}

const std::vector<std::string>& update_metric_names() {
  static const std::vector<std::string> kNames = {"BLEU-1",  "BLEU-2",  "BLEU-4",
                                                  "ROUGE-1", "ROUGE-2", "ROUGE-L",
                                                  "VAR-P",   "VAR-R",   "VAR-F1"};
  return kNames;
}

std::vector<EvaluationRecord> evaluate_update(const LoggingStatement& original,
                                              const LoggingStatement& updated,
                                              const LoggingStatement& truth) {
  const auto orig = static_tokens(original.static_text, original.placeholders);
  const auto upd = static_tokens(updated.static_text, updated.placeholders);
  const auto ref = static_tokens(truth.static_text, truth.placeholders);

  auto text_metric = [&](const std::vector<std::string>& cand, int which) {
    if (ref.empty()) return cand.empty() ? 1.0 : 0.0;
    switch (which) {
      case 0: return bleu(cand, ref, 1);
      case 1: return bleu(cand, ref, 2);
      case 2: return bleu(cand, ref, 4);
      case 3: return rouge_n(cand, ref, 1);
      case 4: return rouge_n(cand, ref, 2);
      default: return rouge_l(cand, ref);
    }
  };

  const Prf vo = variable_prf(original.variables, truth.variables);
  const Prf vu = variable_prf(updated.variables, truth.variables);
  const auto& names = update_metric_names();
  std::vector<EvaluationRecord> out;
  for (std::size_t m = 0; m < names.size(); ++m) {
    EvaluationRecord r;
    r.metric_name = names[m];
    if (m < 6) {
      r.m_origin = text_metric(orig, static_cast<int>(m));
      r.m_updated = text_metric(upd, static_cast<int>(m));
    } else {
      const std::size_t k = m - 6;
      r.m_origin = k == 0 ? vo.precision : k == 1 ? vo.recall : vo.f1;
      r.m_updated = k == 0 ? vu.precision : k == 1 ? vu.recall : vu.f1;
    }
    try {
      r.ic = improvement_coefficient(r.m_origin, r.m_updated);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateOrigin) throw;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace logfix
