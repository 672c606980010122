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

#ifndef MTSUM_SUMMARIZER_H_
#define MTSUM_SUMMARIZER_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mtsum/corpus.h"
#include "mtsum/execution.h"
#include "mtsum/keyphrase.h"
#include "mtsum/topics.h"

namespace mtsum {

enum class Technique { kSenRich, kDocRich };

std::string_view ToString(Technique technique);
// Accepts "sen-rich" and "doc-rich".
Technique ParseTechnique(std::string_view name);

struct SummaryConfig {
  Technique technique = Technique::kSenRich;
  int min_words = 240;
  int max_words = 250;
  double overlap_threshold = 0.5;  // Sen-Rich only
  TopicScoreMode topic_score_mode = TopicScoreMode::kMaxCrts;

  void Validate() const;
};

struct SummarySentence {
  std::string text;  // whitespace collapsed
  std::string source_doc;
  int position = 0;
  int word_count = 0;
  // Sen-Rich: summed topic score. Doc-Rich: ts of the triggering topic.
  double score = 0;
  std::vector<PhraseKey> contributing_topics;  // in topic rank order
};

struct Summary {
  Technique technique = Technique::kSenRich;
  std::vector<SummarySentence> sentences;  // presentation order
  int word_count = 0;
  int min_words = 0;
  int max_words = 0;
  // Set when fewer than min_words could be selected.
  bool shortfall = false;
  std::string centroid_doc;  // top-CDS document
  std::vector<std::string> diagnostics;

  // Share of sentences drawn from centroid_doc; 0 for an empty summary.
  double CentroidFraction() const;
};

// Finds which topics occur as contiguous lemma runs in a sentence.
class TopicMatcher {
 public:
  explicit TopicMatcher(std::span<const ClusterTopic> topics);

  // Distinct topic indices present in the lemma sequence, ascending.
  std::vector<std::size_t> Match(std::span<const std::string> lemmas) const;

  std::span<const ClusterTopic> topics() const { return topics_; }

 private:
  std::span<const ClusterTopic> topics_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_first_lemma_;
};

// Sum of ts over the distinct topics present in the sentence.
double SentenceTopicScore(const Sentence &sentence,
                          std::span<const ClusterTopic> topics);

// Per-sentence topic matches and scores, flattened in cluster order
// (document by document, sentence by sentence).
struct SentenceMatch {
  std::size_t doc = 0;
  std::size_t sentence = 0;
  std::vector<std::size_t> topics;
  double score = 0;
};

std::vector<SentenceMatch> MatchSentences(const Cluster &cluster,
                                          const TopicMatcher &matcher,
                                          Execution execution = Execution::kParallel);

// Jaccard index of the two sentences' topic sets; 0 when both are empty.
double UnitOverlap(const SummarySentence &x, const SummarySentence &y);

// Ranks topic-bearing sentences by summed topic score and greedily takes
// them, skipping any whose overlap with a selected sentence exceeds the
// threshold or that would overrun max_words. Presented in source order.
Summary ExtractSenRich(const Cluster &cluster, const TopicTable &table,
                       const SummaryConfig &config,
                       Execution execution = Execution::kParallel);

// For each topic in rank order, takes the first sentence containing it,
// searching documents in CDS order; then applies the word budget in
// append order. Presented grouped by document in CDS order.
Summary ExtractDocRich(const Cluster &cluster, const TopicTable &table,
                       const SummaryConfig &config,
                       Execution execution = Execution::kParallel);

struct PipelineResult {
  std::vector<DocumentProfile> profiles;
  TopicTable table;
  Summary summary;
};

// Keyphrases, topic table and summary for one cluster.
PipelineResult Summarize(const Cluster &cluster, const ExtractorConfig &extractor,
                         const SummaryConfig &config,
                         Execution execution = Execution::kParallel);

// One sentence per line.
void WriteSummaryText(const Summary &summary, std::ostream &out);

// One JSON record per line: a "sentence" record per summary sentence
// followed by one "summary" record with totals and the centroid fraction.
void WriteSummaryReport(const Summary &summary, std::ostream &out);

}  // namespace mtsum

#endif  // MTSUM_SUMMARIZER_H_
