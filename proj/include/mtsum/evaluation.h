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

#ifndef MTSUM_EVALUATION_H_
#define MTSUM_EVALUATION_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mtsum/execution.h"
#include "mtsum/normalizer.h"
#include "mtsum/rouge.h"

namespace mtsum {

struct EvaluationOptions {
  int ngram_order = 2;
  std::optional<int> max_skip;  // ROUGE-S gap bound; nullopt = unbounded
};

struct ScoreRow {
  std::string system;
  std::string cluster;
  std::string measure;
  RougeScore score;  // mean over references
};

struct AggregateRow {
  std::string system;
  std::string measure;
  RougeScore score;  // mean over clusters
  int clusters = 0;
};

struct EvaluationReport {
  std::vector<ScoreRow> rows;  // sorted by system, cluster, measure
  std::vector<AggregateRow> aggregate;
  std::vector<std::string> diagnostics;
};

// Scores root/candidates/<cluster>/<system>.txt against every
// root/references/<cluster>/*.txt. Throws Error naming the cluster when its
// references are missing.
EvaluationReport EvaluateDirectory(const std::filesystem::path &root,
                                   const Normalizer &normalizer,
                                   const EvaluationOptions &options,
                                   Execution execution = Execution::kParallel);

// Detail table, a blank line, then the aggregate table.
void WriteEvaluationTsv(const EvaluationReport &report, std::ostream &out);

}  // namespace mtsum

#endif  // MTSUM_EVALUATION_H_
