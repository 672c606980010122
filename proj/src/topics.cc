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

#include "mtsum/topics.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "mtsum/error.h"

namespace mtsum {
namespace {

std::set<PhraseKey> KeySet(const DocumentProfile &profile) {
  std::set<PhraseKey> keys;
  for (const ScoredKeyphrase &phrase : profile.keyphrases) keys.insert(phrase.lemmas);
  return keys;
}

const DocumentRelevance *FindRelevance(std::span<const DocumentRelevance> relevances,
                                       std::string_view doc_id) {
  for (const DocumentRelevance &r : relevances) {
    if (r.doc_id == doc_id) return &r;
  }
  return nullptr;
}

DocumentRelevance Relevance(const DocumentProfile &profile,
                            const std::set<PhraseKey> &own_keys,
                            std::span<const DocumentProfile> all_profiles,
                            std::span<const std::set<PhraseKey>> all_keys) {
  if (profile.keyphrases.empty()) {
    throw Error("document " + profile.doc_id + " has no keyphrases");
  }
  DocumentRelevance relevance;
  relevance.doc_id = profile.doc_id;
  // F of each own keyphrase counts the document itself once.
  long total = static_cast<long>(own_keys.size());
  for (std::size_t j = 0; j < all_profiles.size(); ++j) {
    if (all_profiles[j].doc_id == profile.doc_id) continue;
    int shared = 0;
    for (const PhraseKey &key : own_keys) shared += all_keys[j].count(key) ? 1 : 0;
    relevance.link_scores[all_profiles[j].doc_id] = shared;
    total += shared;
  }
  relevance.cds = static_cast<double>(total) / static_cast<double>(own_keys.size());
  return relevance;
}

}  // namespace

std::string_view ToString(TopicScoreMode mode) {
  switch (mode) {
    case TopicScoreMode::kMcs:
      return "mcs";
    case TopicScoreMode::kCts:
      return "cts";
    case TopicScoreMode::kMaxCrts:
      return "maxcrts";
  }
  return "maxcrts";
}

TopicScoreMode ParseTopicScoreMode(std::string_view name) {
  if (name == "mcs") return TopicScoreMode::kMcs;
  if (name == "cts") return TopicScoreMode::kCts;
  if (name == "maxcrts") return TopicScoreMode::kMaxCrts;
  throw Error("unknown topic score mode: " + std::string(name));
}

std::vector<ClusterTopic> UnionTopics(std::span<const DocumentProfile> profiles) {
  std::map<PhraseKey, std::size_t> index;
  std::vector<ClusterTopic> topics;
  for (const DocumentProfile &profile : profiles) {
    for (const ScoredKeyphrase &phrase : profile.keyphrases) {
      auto [it, inserted] = index.try_emplace(phrase.lemmas, topics.size());
      if (inserted) {
        ClusterTopic topic;
        topic.lemmas = phrase.lemmas;
        topics.push_back(std::move(topic));
      }
      ClusterTopic &topic = topics[it->second];
      // Keys are unique within a profile, so each holder is a new document.
      topic.holders.push_back({profile.doc_id, phrase.local_score});
      ++topic.freq;
      if (topic.holders.size() == 1 || phrase.local_score > topic.mcs ||
          (phrase.local_score == topic.mcs && profile.doc_id < topic.source_doc)) {
        topic.mcs = phrase.local_score;
        topic.source_doc = profile.doc_id;
      }
    }
  }
  return topics;
}

void CentroidTopicScore(std::span<ClusterTopic> topics) {
  int max_freq = 0;
  for (const ClusterTopic &topic : topics) max_freq = std::max(max_freq, topic.freq);
  if (max_freq < 1) return;
  for (ClusterTopic &topic : topics) {
    topic.nf = static_cast<double>(topic.freq) / max_freq;
    topic.cts = topic.nf * topic.mcs;
  }
}

int LinkScore(const DocumentProfile &a, const DocumentProfile &b) {
  const std::set<PhraseKey> keys = KeySet(b);
  int shared = 0;
  for (const ScoredKeyphrase &phrase : a.keyphrases) {
    shared += keys.count(phrase.lemmas) ? 1 : 0;
  }
  return shared;
}

DocumentRelevance CentroidDocumentScore(
    const DocumentProfile &profile, std::span<const DocumentProfile> all_profiles) {
  std::vector<std::set<PhraseKey>> all_keys;
  all_keys.reserve(all_profiles.size());
  for (const DocumentProfile &p : all_profiles) all_keys.push_back(KeySet(p));
  return Relevance(profile, KeySet(profile), all_profiles, all_keys);
}

std::vector<DocumentRelevance> ComputeRelevances(
    std::span<const DocumentProfile> profiles, Execution execution) {
  std::vector<std::set<PhraseKey>> keys(profiles.size());
  ForEachIndex(profiles.size(), execution,
               [&](std::size_t i) { keys[i] = KeySet(profiles[i]); });
  std::vector<DocumentRelevance> relevances(profiles.size());
  ForEachIndex(profiles.size(), execution, [&](std::size_t i) {
    relevances[i] = Relevance(profiles[i], keys[i], profiles, keys);
  });
  return relevances;
}

void ResolveSources(std::span<ClusterTopic> topics,
                    std::span<const DocumentRelevance> relevances) {
  for (ClusterTopic &topic : topics) {
    const TopicHolder *best = nullptr;
    double best_cds = 0;
    for (const TopicHolder &holder : topic.holders) {
      if (holder.local_score != topic.mcs) continue;
      const DocumentRelevance *r = FindRelevance(relevances, holder.doc_id);
      const double cds = r ? r->cds : 0.0;
      if (best == nullptr || cds > best_cds ||
          (cds == best_cds && holder.doc_id < best->doc_id)) {
        best = &holder;
        best_cds = cds;
      }
    }
    if (best) topic.source_doc = best->doc_id;
  }
}

void MaxCentroidTopicScore(std::vector<ClusterTopic> &topics,
                           std::span<const DocumentRelevance> relevances,
                           TopicScoreMode mode) {
  for (ClusterTopic &topic : topics) {
    switch (mode) {
      case TopicScoreMode::kMcs:
        topic.ts = topic.mcs;
        break;
      case TopicScoreMode::kCts:
        topic.ts = topic.cts;
        break;
      case TopicScoreMode::kMaxCrts: {
        const DocumentRelevance *r = FindRelevance(relevances, topic.source_doc);
        if (r == nullptr) throw Error("no CDS for document " + topic.source_doc);
        topic.ts = r->cds * topic.cts;
        break;
      }
    }
  }
  std::stable_sort(topics.begin(), topics.end(),
                   [](const ClusterTopic &a, const ClusterTopic &b) {
                     if (a.ts != b.ts) return a.ts > b.ts;
                     if (a.freq != b.freq) return a.freq > b.freq;
                     return a.lemmas < b.lemmas;
                   });
}

double TopicTable::CdsOf(std::string_view doc_id) const {
  const DocumentRelevance *r = FindRelevance(relevances, doc_id);
  return r ? r->cds : 0.0;
}

std::vector<std::string> TopicTable::DocumentsByCds() const {
  std::vector<const DocumentRelevance *> order;
  for (const DocumentRelevance &r : relevances) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const DocumentRelevance *a, const DocumentRelevance *b) {
              if (a->cds != b->cds) return a->cds > b->cds;
              return a->doc_id < b->doc_id;
            });
  std::vector<std::string> ids;
  for (const DocumentRelevance *r : order) ids.push_back(r->doc_id);
  return ids;
}

TopicTable BuildTopicTable(std::span<const DocumentProfile> profiles,
                           TopicScoreMode mode, Execution execution) {
  if (profiles.empty()) throw Error("no documents");
  TopicTable table;
  table.mode = mode;
  table.topics = UnionTopics(profiles);
  CentroidTopicScore(table.topics);
  table.relevances = ComputeRelevances(profiles, execution);
  ResolveSources(table.topics, table.relevances);
  MaxCentroidTopicScore(table.topics, table.relevances, mode);
  return table;
}

void WriteTopicTsv(const TopicTable &table, std::ostream &out) {
  out << "topic\tmcs\tfreq\tnf\tcts\tcds\tts\tsource_doc\n";
  for (const ClusterTopic &topic : table.topics) {
    out << fmt::format("{}\t{:.6f}\t{}\t{:.6f}\t{:.6f}\t{:.6f}\t{:.6f}\t{}\n",
                       JoinKey(topic.lemmas), topic.mcs, topic.freq, topic.nf,
                       topic.cts, table.CdsOf(topic.source_doc), topic.ts,
                       topic.source_doc);
  }
}

}  // namespace mtsum
