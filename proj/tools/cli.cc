// Copyright 2026 The mtsum Authors.
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mtsum/config.h"
#include "mtsum/corpus.h"
#include "mtsum/error.h"
#include "mtsum/evaluation.h"
#include "mtsum/summarizer.h"
#include "mtsum/topics.h"

namespace mtsum {
namespace {

namespace fs = std::filesystem;

struct SharedFlags {
  std::string config;
  std::optional<std::string> normalizer;
  std::optional<std::string> stopwords;
  std::string out;
};

struct SummarizeFlags {
  std::string cluster;
  std::optional<std::string> technique;
  std::optional<int> min_words;
  std::optional<int> max_words;
  std::optional<double> overlap_threshold;
  std::optional<std::string> topic_score;
  std::optional<int> top_k;
  std::string report;
  std::string format = "text";
};

struct EvaluateFlags {
  std::string root;
  std::optional<std::string> max_skip;
  int ngram = 2;
};

void AddShared(CLI::App *command, SharedFlags &flags) {
  command->add_option("--config", flags.config, "key=value config file")
      ->check(CLI::ExistingFile);
  command->add_option("--normalizer", flags.normalizer, "casefold | light-stem");
  command->add_option("--stopwords", flags.stopwords, "stopword list, one per line")
      ->check(CLI::ExistingFile);
  command->add_option("--out", flags.out, "output file (default: stdout)");
}

Settings ResolveSettings(const SharedFlags &flags) {
  Settings settings;
  if (!flags.config.empty()) ApplyConfigFile(flags.config, settings);
  if (flags.normalizer) settings.normalizer = *flags.normalizer;
  if (flags.stopwords) settings.stopwords_path = *flags.stopwords;
  return settings;
}

void ApplySummaryFlags(const SummarizeFlags &flags, Settings &settings) {
  if (flags.technique) settings.summary.technique = ParseTechnique(*flags.technique);
  if (flags.min_words) settings.summary.min_words = *flags.min_words;
  if (flags.max_words) settings.summary.max_words = *flags.max_words;
  if (flags.overlap_threshold) settings.summary.overlap_threshold = *flags.overlap_threshold;
  if (flags.topic_score) {
    settings.summary.topic_score_mode = ParseTopicScoreMode(*flags.topic_score);
  }
  if (flags.top_k) settings.extractor.top_k = *flags.top_k;
}

void Emit(const std::string &content, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << content;
  if (!file) throw Error("cannot write " + path);
}

// Loads the cluster with the resolved normalizer and stopwords.
Cluster PrepareCluster(const std::string &dir, Settings &settings) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir);
  const auto normalizer = MakeNormalizer(settings.normalizer);
  if (!settings.stopwords_path.empty()) {
    settings.extractor.stopwords = LoadStopwords(settings.stopwords_path, *normalizer);
  }
  settings.extractor.Validate();
  settings.summary.Validate();
  return LoadCluster(dir, *normalizer);
}

void RunSummarize(const SharedFlags &shared, const SummarizeFlags &flags, std::ostream &out) {
  if (flags.format != "text" && flags.format != "report") {
    throw Error("--format must be text or report");
  }
  Settings settings = ResolveSettings(shared);
  ApplySummaryFlags(flags, settings);
  const Cluster cluster = PrepareCluster(flags.cluster, settings);
  const PipelineResult result = Summarize(cluster, settings.extractor, settings.summary);

  std::ostringstream text;
  WriteSummaryText(result.summary, text);
  std::ostringstream report;
  WriteSummaryReport(result.summary, report);

  Emit(flags.format == "text" ? text.str() : report.str(), shared.out, out);
  if (!flags.report.empty()) Emit(report.str(), flags.report, out);
}

void RunTopics(const SharedFlags &shared, const SummarizeFlags &flags, std::ostream &out) {
  Settings settings = ResolveSettings(shared);
  ApplySummaryFlags(flags, settings);
  const Cluster cluster = PrepareCluster(flags.cluster, settings);
  const auto profiles = ExtractProfiles(cluster, settings.extractor);
  const TopicTable table = BuildTopicTable(profiles, settings.summary.topic_score_mode);
  std::ostringstream tsv;
  WriteTopicTsv(table, tsv);
  Emit(tsv.str(), shared.out, out);
}

void RunEvaluate(const SharedFlags &shared, const EvaluateFlags &flags, std::ostream &out,
                 std::ostream &err) {
  Settings settings = ResolveSettings(shared);
  if (flags.max_skip) ApplyConfigValue("rouge.max_skip", *flags.max_skip, settings);
  if (!fs::is_directory(flags.root)) throw Error("not a directory: " + flags.root);
  const auto normalizer = MakeNormalizer(settings.normalizer);
  EvaluationOptions options;
  options.ngram_order = flags.ngram;
  options.max_skip = settings.max_skip;
  const EvaluationReport report = EvaluateDirectory(flags.root, *normalizer, options);
  for (const std::string &note : report.diagnostics) err << "mtsum: " << note << '\n';
  std::ostringstream tsv;
  WriteEvaluationTsv(report, tsv);
  Emit(tsv.str(), shared.out, out);
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Keyphrase-centroid multi-document summarizer"};
  app.name("mtsum");
  app.require_subcommand(1);

  SharedFlags shared;
  SummarizeFlags summarize_flags;
  SummarizeFlags topics_flags;
  EvaluateFlags evaluate_flags;

  CLI::App *summarize = app.add_subcommand("summarize", "summarize a cluster directory");
  AddShared(summarize, shared);
  summarize->add_option("cluster", summarize_flags.cluster, "directory of .txt documents")
      ->required();
  summarize->add_option("--technique", summarize_flags.technique, "sen-rich | doc-rich");
  summarize->add_option("--min-words", summarize_flags.min_words);
  summarize->add_option("--max-words", summarize_flags.max_words);
  summarize->add_option("--overlap-threshold", summarize_flags.overlap_threshold);
  summarize->add_option("--topic-score", summarize_flags.topic_score, "mcs | cts | maxcrts");
  summarize->add_option("--top-k", summarize_flags.top_k, "keyphrases per document");
  summarize->add_option("--report", summarize_flags.report, "provenance report (JSON lines)");
  summarize->add_option("--format", summarize_flags.format, "text | report");

  CLI::App *topics = app.add_subcommand("topics", "write the cluster topic table");
  AddShared(topics, shared);
  topics->add_option("cluster", topics_flags.cluster, "directory of .txt documents")
      ->required();
  topics->add_option("--topic-score", topics_flags.topic_score, "mcs | cts | maxcrts");
  topics->add_option("--top-k", topics_flags.top_k, "keyphrases per document");

  CLI::App *evaluate = app.add_subcommand("evaluate", "ROUGE-2 / ROUGE-S evaluation");
  AddShared(evaluate, shared);
  evaluate->add_option("root", evaluate_flags.root,
                       "directory holding candidates/ and references/")
      ->required();
  evaluate->add_option("--max-skip", evaluate_flags.max_skip,
                       "ROUGE-S skip distance (default: unbounded)");
  evaluate->add_option("--ngram", evaluate_flags.ngram, "ROUGE-N order")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (summarize->parsed()) {
      RunSummarize(shared, summarize_flags, out);
    } else if (topics->parsed()) {
      RunTopics(shared, topics_flags, out);
    } else {
      RunEvaluate(shared, evaluate_flags, out, err);
    }
  } catch (const std::exception &e) {
    err << "mtsum: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mtsum
