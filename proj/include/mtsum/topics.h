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

#ifndef MTSUM_TOPICS_H_
#define MTSUM_TOPICS_H_

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtsum/execution.h"
#include "mtsum/keyphrase.h"

namespace mtsum {

enum class TopicScoreMode { kMcs, kCts, kMaxCrts };

std::string_view ToString(TopicScoreMode mode);
// Accepts "mcs", "cts", "maxcrts". Throws Error otherwise.
TopicScoreMode ParseTopicScoreMode(std::string_view name);

// A document holding a topic, with its local score for it.
struct TopicHolder {
  std::string doc_id;
  double local_score = 0;
};

// A distinct keyphrase across the cluster with its centroid scores.
struct ClusterTopic {
  PhraseKey lemmas;
  double mcs = 0;  // maximum coverage: max LS over holders
  int freq = 0;    // F: number of documents holding the phrase
  double nf = 0;   // F / max F
  double cts = 0;  // nf * mcs
  double ts = 0;   // final score for the selected mode
  std::string source_doc;            // holder supplying mcs
  std::vector<TopicHolder> holders;  // in profile order
};

struct DocumentRelevance {
  std::string doc_id;
  double cds = 0;  // mean cluster frequency of the document's keyphrases
  std::map<std::string, int> link_scores;  // other doc_id -> shared phrases
};

// One topic per distinct phrase key, in order of first appearance across
// the profiles, with mcs, freq, holders and source_doc filled. Ties on mcs
// pick the lexicographically smallest doc_id; ResolveSources refines that.
std::vector<ClusterTopic> UnionTopics(std::span<const DocumentProfile> profiles);

// Fills nf = freq / max freq and cts = nf * mcs.
void CentroidTopicScore(std::span<ClusterTopic> topics);

// Number of phrase keys present in both profiles.
int LinkScore(const DocumentProfile &a, const DocumentProfile &b);

// CDS of `profile` against the cluster: the sum over its keyphrases of the
// number of documents holding each (itself included) divided by NP. Link
// scores to every other profile are recorded. Throws Error if the profile
// has no keyphrases.
DocumentRelevance CentroidDocumentScore(
    const DocumentProfile &profile, std::span<const DocumentProfile> all_profiles);

std::vector<DocumentRelevance> ComputeRelevances(
    std::span<const DocumentProfile> profiles,
    Execution execution = Execution::kParallel);

// Re-picks source_doc among holders tied at mcs: highest CDS first, then
// lexicographic doc_id.
void ResolveSources(std::span<ClusterTopic> topics,
                    std::span<const DocumentRelevance> relevances);

// Fills ts for `mode` (mcs, cts, or cds(source_doc) * cts) and sorts the
// topics by ts descending; ties: higher freq, then lexicographic key.
void MaxCentroidTopicScore(std::vector<ClusterTopic> &topics,
                           std::span<const DocumentRelevance> relevances,
                           TopicScoreMode mode);

struct TopicTable {
  TopicScoreMode mode = TopicScoreMode::kMaxCrts;
  std::vector<ClusterTopic> topics;             // ts descending
  std::vector<DocumentRelevance> relevances;    // profile order

  double CdsOf(std::string_view doc_id) const;
  // Document ids by CDS descending, ties by doc_id.
  std::vector<std::string> DocumentsByCds() const;
};

// Runs the whole centroid scoring scheme over the profiles.
TopicTable BuildTopicTable(std::span<const DocumentProfile> profiles,
                           TopicScoreMode mode,
                           Execution execution = Execution::kParallel);

// Tab-separated report: topic, mcs, freq, nf, cts, cds, ts, source_doc.
void WriteTopicTsv(const TopicTable &table, std::ostream &out);

}  // namespace mtsum

#endif  // MTSUM_TOPICS_H_
