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

#include "mtsum/evaluation.h"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "mtsum/corpus.h"
#include "mtsum/error.h"

namespace mtsum {
namespace {

namespace fs = std::filesystem;

std::vector<fs::path> SortedEntries(const fs::path &dir, bool directories) {
  std::vector<fs::path> out;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (directories ? entry.is_directory()
                    : entry.is_regular_file() && entry.path().extension() == ".txt") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Job {
  std::string system;
  std::string cluster;
  fs::path candidate;
  const std::vector<LemmaText> *references;
};

}  // namespace

EvaluationReport EvaluateDirectory(const fs::path &root, const Normalizer &normalizer,
                                   const EvaluationOptions &options,
                                   Execution execution) {
  const fs::path candidates_dir = root / "candidates";
  const fs::path references_dir = root / "references";
  if (!fs::is_directory(candidates_dir)) {
    throw Error("missing candidates directory: " + candidates_dir.string());
  }

  std::map<std::string, std::vector<LemmaText>> references;
  std::vector<Job> jobs;
  for (const fs::path &cluster_dir : SortedEntries(candidates_dir, true)) {
    const std::string cluster = cluster_dir.filename().string();
    const fs::path ref_dir = references_dir / cluster;
    if (!fs::is_directory(ref_dir)) throw Error("missing references for cluster " + cluster);
    std::vector<LemmaText> &refs = references[cluster];
    for (const fs::path &file : SortedEntries(ref_dir, false)) {
      refs.push_back(ToLemmaText(ReadTextFile(file), normalizer));
    }
    if (refs.empty()) throw Error("missing references for cluster " + cluster);
    for (const fs::path &file : SortedEntries(cluster_dir, false)) {
      jobs.push_back({file.stem().string(), cluster, file, &refs});
    }
  }
  if (jobs.empty()) throw Error("no candidate summaries under " + candidates_dir.string());

  const std::string ngram_name = fmt::format("ROUGE-{}", options.ngram_order);
  const std::string skip_name =
      options.max_skip ? fmt::format("ROUGE-S{}", *options.max_skip) : "ROUGE-S";

  std::vector<std::vector<ScoreRow>> job_rows(jobs.size());
  std::vector<std::vector<std::string>> job_notes(jobs.size());
  ForEachIndex(jobs.size(), execution, [&](std::size_t i) {
    const Job &job = jobs[i];
    const LemmaText candidate = ToLemmaText(ReadTextFile(job.candidate), normalizer);
    const RougeResult n = RougeN(candidate, *job.references, options.ngram_order);
    const RougeResult s = RougeS(candidate, *job.references, options.max_skip);
    job_rows[i].push_back({job.system, job.cluster, ngram_name, n.mean});
    job_rows[i].push_back({job.system, job.cluster, skip_name, s.mean});
    for (const auto *result : {&n, &s}) {
      for (const std::string &note : result->diagnostics) {
        job_notes[i].push_back(job.cluster + "/" + job.system + ": " + note);
      }
    }
  });

  EvaluationReport report;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    for (ScoreRow &row : job_rows[i]) report.rows.push_back(std::move(row));
    for (std::string &note : job_notes[i]) report.diagnostics.push_back(std::move(note));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ScoreRow &a, const ScoreRow &b) {
                     return std::tie(a.system, a.cluster, a.measure) <
                            std::tie(b.system, b.cluster, b.measure);
                   });

  std::map<std::pair<std::string, std::string>, AggregateRow> totals;
  for (const ScoreRow &row : report.rows) {
    AggregateRow &agg = totals[{row.system, row.measure}];
    agg.system = row.system;
    agg.measure = row.measure;
    agg.score.precision += row.score.precision;
    agg.score.recall += row.score.recall;
    agg.score.f_measure += row.score.f_measure;
    ++agg.clusters;
  }
  for (auto &[key, agg] : totals) {
    agg.score.precision /= agg.clusters;
    agg.score.recall /= agg.clusters;
    agg.score.f_measure /= agg.clusters;
    report.aggregate.push_back(agg);
  }
  return report;
}

void WriteEvaluationTsv(const EvaluationReport &report, std::ostream &out) {
  out << "system\tcluster\tmeasure\tP\tR\tF\n";
  for (const ScoreRow &row : report.rows) {
    out << fmt::format("{}\t{}\t{}\t{:.4f}\t{:.4f}\t{:.4f}\n", row.system, row.cluster,
                       row.measure, row.score.precision, row.score.recall,
                       row.score.f_measure);
  }
  out << "\nsystem\tmeasure\tP\tR\tF\tclusters\n";
  for (const AggregateRow &row : report.aggregate) {
    out << fmt::format("{}\t{}\t{:.4f}\t{:.4f}\t{:.4f}\t{}\n", row.system, row.measure,
                       row.score.precision, row.score.recall, row.score.f_measure,
                       row.clusters);
  }
}

}  // namespace mtsum
