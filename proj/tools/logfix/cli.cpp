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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include "logfix/config.hpp"
#include "logfix/detector.hpp"
#include "logfix/error.hpp"
#include "logfix/evaluation.hpp"
#include "logfix/json_io.hpp"
#include "logfix/lcc_miner.hpp"
#include "logfix/pipeline.hpp"
#include "logfix/synthesizer.hpp"
#include "logfix/util.hpp"

namespace logfix::cli {

namespace fs = std::filesystem;

namespace {

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> jobs;
};

ToolConfig resolve_config(const Globals& g) {
  ToolConfig c = g.config_path.empty() ? ToolConfig{} : load_tool_config(g.config_path);
  if (g.seed) {
    c.seed = *g.seed;
    c.train.seed = *g.seed;
  }
  if (g.jobs) {
    if (*g.jobs == 0) throw Error(ErrorKind::kConfigError, "--jobs must be positive");
    c.jobs = *g.jobs;
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> java_sources(const std::string& input) {
  std::vector<std::pair<std::string, std::string>> out;  // (relative path, absolute path)
  const fs::path root(input);
  if (fs::is_regular_file(root)) {
    out.emplace_back(root.filename().generic_string(), root.string());
    return out;
  }
  if (!fs::is_directory(root)) throw Error(ErrorKind::kDataError, "no such file or directory: " + input);
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file() && e.path().extension() == ".java") {
      out.emplace_back(fs::relative(e.path(), root).generic_string(), e.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- extract -------------------------------------------------------------

struct ExtractArgs {
  std::string in;
  std::string out;
  std::string project;
};

int cmd_extract(const ExtractArgs& a, const ToolConfig& c, std::ostream& err) {
  JsonlWriter writer(a.out);
  std::size_t methods = 0;
  std::size_t statements = 0;
  for (const auto& [rel, abs] : java_sources(a.in)) {
    auto result = extract_methods(read_file(abs), rel, c.parser, a.project);
    for (const auto& d : result.errors) {
      err << d.path << ":" << d.line << ": " << error_kind_name(d.kind) << ": " << d.message << "\n";
    }
    for (const auto& m : result.methods) {
      writer.write_record(m);
      ++methods;
      statements += m.statements.size();
    }
  }
  err << "extracted " << statements << " statements from " << methods << " methods\n";
  return 0;
}

// --- mine ----------------------------------------------------------------

struct MineArgs {
  std::string repo;
  std::string snapshots;
  std::string project;
  std::string since;
  std::string out;
  std::string metadata;
  std::string selected_out;
  bool well_maintained = false;
};

int cmd_mine(const MineArgs& a, const ToolConfig& c, std::ostream& err) {
  if (!a.metadata.empty()) {
    if (a.selected_out.empty()) throw Error(ErrorKind::kConfigError, "--metadata needs --selected-out");
    auto repos = filter_target_repositories(read_jsonl<RepoMetadata>(a.metadata));
    JsonlWriter writer(a.selected_out);
    std::size_t kept = 0;
    for (const auto& r : repos) {
      if (a.well_maintained && !filter_well_maintained(r)) continue;
      writer.write_record(r);
      ++kept;
    }
    err << "selected " << kept << " repositories\n";
  }
  if (a.repo.empty() && a.snapshots.empty()) {
    if (a.metadata.empty()) throw Error(ErrorKind::kConfigError, "give --repo, --snapshots or --metadata");
    return 0;
  }
  if (a.out.empty()) throw Error(ErrorKind::kConfigError, "--out is required when mining history");
  std::unique_ptr<HistoryProvider> history;
  if (!a.repo.empty()) {
    std::optional<Date> since;
    if (!a.since.empty()) since = parse_date(a.since);
    history = std::make_unique<GitHistoryProvider>(a.repo, since);
  } else {
    history = std::make_unique<FixtureHistoryProvider>(a.snapshots);
  }
  const auto result = mine_history(*history, c.parser, a.project, static_cast<int>(c.jobs));
  for (const auto& d : result.diagnostics) err << d.commit_id << ": " << d.message << "\n";
  JsonlWriter writer(a.out);
  for (const auto& lcc : result.lccs) writer.write_record(lcc);
  err << "mined " << result.lccs.size() << " log-centric changes from " << history->size()
      << " commits\n";
  return 0;
}

// --- synthesize ----------------------------------------------------------

struct SynthesizeArgs {
  std::string in;
  std::string out;
  std::size_t per_type = 500;
  std::optional<std::size_t> clean;
  bool use_backend = false;
};

int cmd_synthesize(const SynthesizeArgs& a, const ToolConfig& c, std::ostream& err) {
  const auto methods = read_jsonl<MethodWithStatements>(a.in);
  auto clean = clean_samples(methods);
  const Lexicons lx = load_lexicons(c.paths);
  MutationResources res;
  res.typos = lx.typos.get();
  res.verbs = lx.verbs.get();
  res.antonyms = lx.antonyms.get();
  res.parser = c.parser;
  std::unique_ptr<LlmBackend> backend;
  if (a.use_backend) {
    backend = make_backend(c.backend);
    res.backend = backend.get();
  }
  const auto mutated = synthesize_corpus(clean, a.per_type, c.seed, res);

  const std::size_t keep = std::min(clean.size(), a.clean.value_or(clean.size()));
  if (keep < clean.size()) {
    Rng rng(mix_seed(c.seed, 0xC1EA));
    rng.shuffle(clean);
    clean.resize(keep);
  }
  JsonlWriter writer(a.out);
  for (const auto& s : clean) writer.write_record(s);
  for (const auto& s : mutated) writer.write_record(s);
  err << "wrote " << clean.size() << " clean and " << mutated.size() << " mutated samples\n";
  return 0;
}

// --- train ---------------------------------------------------------------

struct TrainArgs {
  std::string corpus;
  std::string out;
  std::string history;
  std::optional<int> epochs;
  std::optional<double> learning_rate;
  std::optional<std::size_t> dim;
  std::optional<double> alpha;
};

int cmd_train(const TrainArgs& a, const ToolConfig& c, std::ostream& err) {
  TrainConfig tc = c.train;
  if (a.epochs) tc.epochs = *a.epochs;
  if (a.learning_rate) tc.learning_rate = *a.learning_rate;
  if (a.dim) tc.embedding_dim = *a.dim;
  if (a.alpha) tc.alpha = *a.alpha;
  const auto corpus = read_jsonl<LabeledSample>(a.corpus);
  const auto result = train(corpus, tc);
  result.model.save(a.out);
  Json history = Json::array();
  for (const auto& h : result.history) {
    history.push_back(Json{{"epoch", h.epoch},
                           {"train_loss", h.train_loss},
                           {"validation_f1_macro", h.validation_f1_macro},
                           {"validation_accuracy", h.validation_accuracy}});
  }
  if (!a.history.empty()) {
    Json summary{{"history", history},
                 {"best_epoch", result.best_epoch},
                 {"split", Json{{"train", result.split.train.size()},
                                {"validation", result.split.validation.size()},
                                {"test", result.split.test.size()}}},
                 {"test_f1_macro", result.test_report.f1_macro},
                 {"test_accuracy", result.test_report.accuracy}};
    write_file(a.history, summary.dump(2) + "\n");
  }
  err << "best epoch " << result.best_epoch << ", test F1-macro " << result.test_report.f1_macro << "\n";
  return 0;
}

// --- detect --------------------------------------------------------------

struct DetectArgs {
  std::string in;
  std::string model;
  std::string out;
};

int cmd_detect(const DetectArgs& a, std::ostream& err) {
  const auto model = DetectorModel::load(a.model);
  JsonlWriter writer(a.out);
  std::array<std::size_t, kNumLabels> counts{};
  for_each_jsonl(a.in, [&](const Json& j) {
    const auto m = j.get<MethodWithStatements>();
    for (const auto& st : m.statements) {
      Detection d{m.context, st, model.predict(st, m.context)};
      ++counts[label_index(d.prediction.label)];
      writer.write_record(d);
    }
  });
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    err << label_name(kAllLabels[c]) << ": " << counts[c] << "\n";
  }
  return 0;
}

// --- fix -----------------------------------------------------------------

struct FixArgs {
  std::string in;
  std::string lcc;
  std::string model;
  std::string backend;
  std::string transcript;
  std::optional<std::size_t> exemplars;
  std::string out;
};

int cmd_fix(const FixArgs& a, ToolConfig c, std::ostream& err) {
  if (!a.backend.empty()) c.backend.kind = a.backend;
  if (!a.transcript.empty()) c.backend.transcript = a.transcript;
  if (c.backend.kind != "mock" && c.backend.kind != "http") {
    throw Error(ErrorKind::kConfigError, "--backend must be mock or http");
  }
  auto backend = make_backend(c.backend);
  std::optional<DetectorModel> model;
  if (!a.model.empty()) model = DetectorModel::load(a.model);
  std::optional<ExemplarRetriever> retriever;
  if (!a.lcc.empty()) {
    retriever.emplace(read_jsonl<LogCentricChange>(a.lcc), Bm25Params{c.retrieval.k1, c.retrieval.b});
  }
  PipelineConfig pc;
  pc.exemplars = a.exemplars.value_or(c.retrieval.k);
  pc.workers = c.jobs;
  pc.parser = c.parser;

  JsonlWriter writer(a.out);
  std::vector<PipelineItem> items;
  std::vector<Prediction> predictions;
  bool backend_failed = false;
  std::array<std::size_t, 4> status{};
  auto flush = [&] {
    const auto results = run_pipeline_batch(items, model ? std::vector<Prediction>{} : predictions,
                                            model ? &*model : nullptr,
                                            retriever ? &*retriever : nullptr, *backend, pc);
    for (const auto& r : results) {
      backend_failed = backend_failed || r.backend_error;
      ++status[static_cast<std::size_t>(r.status)];
      for (const auto& d : r.diagnostics) err << r.statement.location.path << ":" << r.statement.location.start_line << ": " << d << "\n";
      writer.write_record(r);
    }
    items.clear();
    predictions.clear();
  };
  constexpr std::size_t kChunk = 256;
  for_each_jsonl(a.in, [&](const Json& j) {
    const auto d = j.get<Detection>();
    items.push_back({d.context, d.statement});
    predictions.push_back(d.prediction);
    if (items.size() == kChunk) flush();
  });
  if (!items.empty()) flush();
  err << "clean " << status[0] << ", rejected " << status[1] << ", updated " << status[2]
      << ", failed " << status[3] << "\n";
  return backend_failed ? 3 : 0;
}

// --- evaluate ------------------------------------------------------------

struct EvaluateArgs {
  std::string results;
  std::string truth;
  std::string out;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
  auto results = read_jsonl<UpdateResult>(a.results);
  const auto truth = read_jsonl<TruthRecord>(a.truth);
  const auto report = evaluate_results(results, truth);
  const std::string text = report_json(report).dump(2) + "\n";
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
  return 0;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kBackendError:
      return 3;
    case ErrorKind::kConfigError:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detect and repair defective logging statements in Java sources."};
  app.name("logfix");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Seed overriding the configuration");
  app.add_option("--jobs", g.jobs, "Upper bound on worker threads");

  ExtractArgs ea;
  auto* extract = app.add_subcommand("extract", "Extract methods and their logging statements");
  extract->add_option("--in", ea.in, "Java file or source directory")->required();
  extract->add_option("--out", ea.out, "Output methods JSONL")->required();
  extract->add_option("--project", ea.project, "Project id recorded on every method");

  MineArgs ma;
  auto* mine = app.add_subcommand("mine", "Mine log-centric changes from commit history");
  mine->add_option("--repo", ma.repo, "Git working copy");
  mine->add_option("--snapshots", ma.snapshots, "Directory of <seq>_<commit> tree snapshots");
  mine->add_option("--project", ma.project, "Project id recorded on every change");
  mine->add_option("--since", ma.since, "Only commits on or after YYYY-MM-DD (git only)");
  mine->add_option("--out", ma.out, "Output changes JSONL");
  mine->add_option("--metadata", ma.metadata, "Repository metadata JSONL to filter");
  mine->add_option("--selected-out", ma.selected_out, "Output JSONL of repositories passing the filter");
  mine->add_flag("--well-maintained", ma.well_maintained, "Also require company origin, issues and license");

  SynthesizeArgs sa;
  auto* synth = app.add_subcommand("synthesize", "Build a labeled corpus by mutating clean statements");
  synth->add_option("--in", sa.in, "Methods JSONL from well-maintained sources")->required();
  synth->add_option("--out", sa.out, "Output corpus JSONL")->required();
  synth->add_option("--per-type", sa.per_type, "Mutated samples per defect type")->capture_default_str();
  synth->add_option("--clean", sa.clean, "Clean samples to keep (default: all)");
  synth->add_flag("--use-backend", sa.use_backend, "Ask the configured backend for semantic mutations first");

  TrainArgs ta;
  auto* tr = app.add_subcommand("train", "Train the defect detector");
  tr->add_option("--corpus", ta.corpus, "Labeled corpus JSONL")->required();
  tr->add_option("--out", ta.out, "Output checkpoint")->required();
  tr->add_option("--history", ta.history, "Write per-epoch metrics JSON here");
  tr->add_option("--epochs", ta.epochs, "Training epochs");
  tr->add_option("--lr", ta.learning_rate, "Learning rate");
  tr->add_option("--dim", ta.dim, "Embedding width");
  tr->add_option("--alpha", ta.alpha, "Weight of the cosine term");

  DetectArgs da;
  auto* detect = app.add_subcommand("detect", "Predict a defect label for every statement");
  detect->add_option("--in", da.in, "Methods JSONL")->required();
  detect->add_option("--model", da.model, "Detector checkpoint")->required();
  detect->add_option("--out", da.out, "Output detections JSONL")->required();

  FixArgs fa;
  auto* fix = app.add_subcommand("fix", "Check and update detected defects");
  fix->add_option("--in", fa.in, "Detections JSONL")->required();
  fix->add_option("--out", fa.out, "Output results JSONL")->required();
  fix->add_option("--lcc", fa.lcc, "Historical changes JSONL used for exemplars");
  fix->add_option("--model", fa.model, "Re-predict labels with this checkpoint");
  fix->add_option("--backend", fa.backend, "mock or http (overrides the config)");
  fix->add_option("--transcript", fa.transcript, "Mock backend reply rules JSON");
  fix->add_option("--exemplars", fa.exemplars, "Exemplars per prompt");

  EvaluateArgs va;
  auto* evaluate = app.add_subcommand("evaluate", "Score results against ground truth");
  evaluate->add_option("--results", va.results, "Results JSONL")->required();
  evaluate->add_option("--truth", va.truth, "Truth JSONL")->required();
  evaluate->add_option("--out", va.out, "Report JSON (default: standard output)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "logfix: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    const ToolConfig config = resolve_config(g);
    if (extract->parsed()) return cmd_extract(ea, config, err);
    if (mine->parsed()) return cmd_mine(ma, config, err);
    if (synth->parsed()) return cmd_synthesize(sa, config, err);
    if (tr->parsed()) return cmd_train(ta, config, err);
    if (detect->parsed()) return cmd_detect(da, err);
    if (fix->parsed()) return cmd_fix(fa, config, err);
    if (evaluate->parsed()) return cmd_evaluate(va, out);
  } catch (const Error& e) {
    err << "logfix: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "logfix: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace logfix::cli
