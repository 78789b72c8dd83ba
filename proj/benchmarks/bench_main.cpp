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

#include <benchmark/benchmark.h>

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "logfix/detector.hpp"
#include "logfix/metrics.hpp"
#include "logfix/retrieval.hpp"
#include "logfix/source_parser.hpp"
#include "logfix/synthesizer.hpp"
#include "logfix/tokenizer.hpp"
#include "logfix/util.hpp"

namespace {

using namespace logfix;

const std::vector<std::string>& sources() {
  static const std::vector<std::string> kSources = [] {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(LOGFIX_FIXTURE_DIR "/clean_corpus")) {
      if (e.path().extension() == ".java") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<std::string> out;
    for (const auto& f : files) out.push_back(read_file(f.string()));
    return out;
  }();
  return kSources;
}

const std::vector<MethodWithStatements>& methods() {
  static const std::vector<MethodWithStatements> kMethods = [] {
    std::vector<MethodWithStatements> out;
    for (const auto& s : sources()) {
      auto r = extract_methods(s, "Bench.java", {}, "bench");
      out.insert(out.end(), r.methods.begin(), r.methods.end());
    }
    return out;
  }();
  return kMethods;
}

void BM_ExtractMethods(benchmark::State& state) {
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& s : sources()) {
      benchmark::DoNotOptimize(extract_methods(s, "Bench.java", {}));
      bytes += s.size();
    }
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_ExtractMethods);

void BM_SegmentCode(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& m : methods()) benchmark::DoNotOptimize(segment_code(m.context.source_text));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * methods().size()));
}
BENCHMARK(BM_SegmentCode);

void BM_Bm25Query(benchmark::State& state) {
  std::vector<std::vector<std::string>> docs;
  for (const auto& m : methods()) {
    for (const auto& s : m.statements) docs.push_back(retrieval_tokens(s.raw_text));
  }
  const Bm25Index index(docs);
  const auto query = retrieval_tokens("LOG.info(\"Starting receiver thread on port {}\", port);");
  for (auto _ : state) {
    double best = 0.0;
    for (std::size_t d = 0; d < index.size(); ++d) best = std::max(best, index.score(query, d));
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * index.size()));
}
BENCHMARK(BM_Bm25Query);

void BM_EncoderPredict(benchmark::State& state) {
  std::vector<std::string> texts;
  for (const auto& m : methods()) texts.push_back(m.context.source_text);
  DetectorModel model;
  model.encoder = EncoderModel(Vocabulary::build(texts), static_cast<std::size_t>(state.range(0)), 1);
  model.head = ClassifierHead(static_cast<std::size_t>(state.range(0)));
  const auto& m = methods().front();
  for (auto _ : state) benchmark::DoNotOptimize(model.predict(m.statements.front(), m.context));
}
BENCHMARK(BM_EncoderPredict)->Arg(64)->Arg(128);

void BM_BleuRouge(benchmark::State& state) {
  const auto cand = static_tokens("Started receiver thread on port {} after {} retries");
  const auto ref = static_tokens("Starting receiver thread on port {} after {} attempts");
  for (auto _ : state) {
    benchmark::DoNotOptimize(bleu(cand, ref, 4));
    benchmark::DoNotOptimize(rouge_l(cand, ref));
  }
}
BENCHMARK(BM_BleuRouge);

}  // namespace

BENCHMARK_MAIN();
