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

#include "mtsum/summarizer.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "mtsum/error.h"
#include "mtsum/text.h"

namespace mtsum {
namespace {

struct SentenceRef {
  std::size_t doc;
  std::size_t sentence;
};

std::map<std::string, std::size_t> RankDocuments(const TopicTable &table) {
  std::map<std::string, std::size_t> rank;
  const std::vector<std::string> order = table.DocumentsByCds();
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

SummarySentence MakeSummarySentence(const Cluster &cluster, const TopicTable &table,
                                    const SentenceMatch &match, double score) {
  const Document &doc = cluster.documents[match.doc];
  const Sentence &sentence = doc.sentences[match.sentence];
  SummarySentence out;
  out.text = CollapseWhitespace(sentence.raw_text);
  out.source_doc = doc.doc_id;
  out.position = sentence.index;
  out.word_count = static_cast<int>(sentence.word_count());
  out.score = score;
  for (std::size_t t : match.topics) out.contributing_topics.push_back(table.topics[t].lemmas);
  return out;
}

// Walks candidates in order and keeps those that fit the budget. Once
// min_words is reached, the first candidate that does not fit ends the walk.
template <typename Accept>
std::vector<std::size_t> ApplyBudget(std::span<const int> words,
                                     const SummaryConfig &config, Accept accept,
                                     int &total) {
  std::vector<std::size_t> chosen;
  total = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!accept(i, chosen)) continue;
    if (total + words[i] > config.max_words) {
      if (total >= config.min_words) break;
      continue;
    }
    chosen.push_back(i);
    total += words[i];
  }
  return chosen;
}

void Finish(Summary &summary, const TopicTable &table, const SummaryConfig &config,
            const std::map<std::string, std::size_t> &doc_rank) {
  std::stable_sort(summary.sentences.begin(), summary.sentences.end(),
                   [&](const SummarySentence &a, const SummarySentence &b) {
                     const std::size_t ra = doc_rank.at(a.source_doc);
                     const std::size_t rb = doc_rank.at(b.source_doc);
                     if (ra != rb) return ra < rb;
                     return a.position < b.position;
                   });
  summary.technique = config.technique;
  summary.min_words = config.min_words;
  summary.max_words = config.max_words;
  summary.shortfall = summary.word_count < config.min_words;
  const std::vector<std::string> order = table.DocumentsByCds();
  if (!order.empty()) summary.centroid_doc = order.front();
}

}  // namespace

std::string_view ToString(Technique technique) {
  return technique == Technique::kSenRich ? "sen-rich" : "doc-rich";
}

Technique ParseTechnique(std::string_view name) {
  if (name == "sen-rich") return Technique::kSenRich;
  if (name == "doc-rich") return Technique::kDocRich;
  throw Error("unknown technique: " + std::string(name));
}

void SummaryConfig::Validate() const {
  if (min_words <= 0 || min_words > max_words) {
    throw Error("word budget requires 0 < min_words <= max_words");
  }
  if (!(overlap_threshold >= 0.0 && overlap_threshold <= 1.0)) {
    throw Error("overlap threshold must lie in [0, 1]");
  }
}

double Summary::CentroidFraction() const {
  if (sentences.empty()) return 0.0;
  const auto from_centroid =
      std::count_if(sentences.begin(), sentences.end(),
                    [&](const SummarySentence &s) { return s.source_doc == centroid_doc; });
  return static_cast<double>(from_centroid) / static_cast<double>(sentences.size());
}

TopicMatcher::TopicMatcher(std::span<const ClusterTopic> topics) : topics_(topics) {
  for (std::size_t i = 0; i < topics.size(); ++i) {
    if (!topics[i].lemmas.empty()) by_first_lemma_[topics[i].lemmas.front()].push_back(i);
  }
}

std::vector<std::size_t> TopicMatcher::Match(std::span<const std::string> lemmas) const {
  std::vector<std::size_t> found;
  for (std::size_t start = 0; start < lemmas.size(); ++start) {
    auto it = by_first_lemma_.find(lemmas[start]);
    if (it == by_first_lemma_.end()) continue;
    for (std::size_t t : it->second) {
      const PhraseKey &key = topics_[t].lemmas;
      if (start + key.size() > lemmas.size()) continue;
      if (std::equal(key.begin(), key.end(), lemmas.begin() + start)) found.push_back(t);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

double SentenceTopicScore(const Sentence &sentence, std::span<const ClusterTopic> topics) {
  const TopicMatcher matcher(topics);
  double score = 0;
  for (std::size_t t : matcher.Match(sentence.lemmas)) score += topics[t].ts;
  return score;
}

std::vector<SentenceMatch> MatchSentences(const Cluster &cluster,
                                          const TopicMatcher &matcher,
                                          Execution execution) {
  std::vector<SentenceMatch> matches;
  for (std::size_t d = 0; d < cluster.documents.size(); ++d) {
    for (std::size_t s = 0; s < cluster.documents[d].sentences.size(); ++s) {
      matches.push_back({d, s, {}, 0.0});
    }
  }
  const auto topics = matcher.topics();
  ForEachIndex(matches.size(), execution, [&](std::size_t i) {
    SentenceMatch &m = matches[i];
    m.topics = matcher.Match(cluster.documents[m.doc].sentences[m.sentence].lemmas);
    for (std::size_t t : m.topics) m.score += topics[t].ts;
  });
  return matches;
}

double UnitOverlap(const SummarySentence &x, const SummarySentence &y) {
  const std::set<PhraseKey> a(x.contributing_topics.begin(), x.contributing_topics.end());
  const std::set<PhraseKey> b(y.contributing_topics.begin(), y.contributing_topics.end());
  std::size_t shared = 0;
  for (const PhraseKey &key : a) shared += b.count(key);
  const std::size_t united = a.size() + b.size() - shared;
  return united == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(united);
}

Summary ExtractSenRich(const Cluster &cluster, const TopicTable &table,
                       const SummaryConfig &config, Execution execution) {
  config.Validate();
  const TopicMatcher matcher(table.topics);
  const auto doc_rank = RankDocuments(table);

  std::vector<SentenceMatch> ranking;
  for (SentenceMatch &m : MatchSentences(cluster, matcher, execution)) {
    if (!m.topics.empty()) ranking.push_back(std::move(m));
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](const SentenceMatch &a, const SentenceMatch &b) {
                     if (a.score != b.score) return a.score > b.score;
                     const std::size_t ra = doc_rank.at(cluster.documents[a.doc].doc_id);
                     const std::size_t rb = doc_rank.at(cluster.documents[b.doc].doc_id);
                     if (ra != rb) return ra < rb;
                     return a.sentence < b.sentence;
                   });

  std::vector<SummarySentence> candidates;
  std::vector<int> words;
  for (const SentenceMatch &m : ranking) {
    candidates.push_back(MakeSummarySentence(cluster, table, m, m.score));
    words.push_back(candidates.back().word_count);
  }

  Summary summary;
  const auto chosen = ApplyBudget(
      words, config,
      [&](std::size_t i, const std::vector<std::size_t> &selected) {
        return std::none_of(selected.begin(), selected.end(), [&](std::size_t j) {
          return UnitOverlap(candidates[i], candidates[j]) > config.overlap_threshold;
        });
      },
      summary.word_count);
  for (std::size_t i : chosen) summary.sentences.push_back(candidates[i]);
  if (ranking.empty()) summary.diagnostics.push_back("no sentence contains a cluster topic");
  Finish(summary, table, config, doc_rank);
  return summary;
}

Summary ExtractDocRich(const Cluster &cluster, const TopicTable &table,
                       const SummaryConfig &config, Execution execution) {
  config.Validate();
  const TopicMatcher matcher(table.topics);
  const auto doc_rank = RankDocuments(table);
  const std::vector<SentenceMatch> matches = MatchSentences(cluster, matcher, execution);

  // Matches laid out by document in CDS order, sentences in position order.
  std::vector<std::size_t> doc_index(cluster.documents.size());
  for (std::size_t d = 0; d < cluster.documents.size(); ++d) {
    doc_index[doc_rank.at(cluster.documents[d].doc_id)] = d;
  }
  std::vector<std::size_t> first_match(cluster.documents.size() + 1, 0);
  for (std::size_t d = 0; d < cluster.documents.size(); ++d) {
    first_match[d + 1] = first_match[d] + cluster.documents[d].sentences.size();
  }

  Summary summary;
  std::vector<SummarySentence> appended;
  std::set<std::size_t> taken;
  for (std::size_t t = 0; t < table.topics.size(); ++t) {
    bool found = false;
    for (std::size_t d : doc_index) {
      for (std::size_t i = first_match[d]; i < first_match[d + 1] && !found; ++i) {
        if (!std::binary_search(matches[i].topics.begin(), matches[i].topics.end(), t)) {
          continue;
        }
        found = true;
        if (taken.insert(i).second) {
          appended.push_back(MakeSummarySentence(cluster, table, matches[i],
                                                 table.topics[t].ts));
        }
      }
      if (found) break;
    }
    if (!found) {
      summary.diagnostics.push_back("topic not found in any sentence: " +
                                    JoinKey(table.topics[t].lemmas));
    }
  }

  std::vector<int> words;
  for (const SummarySentence &s : appended) words.push_back(s.word_count);
  const auto chosen = ApplyBudget(
      words, config, [](std::size_t, const std::vector<std::size_t> &) { return true; },
      summary.word_count);
  for (std::size_t i : chosen) summary.sentences.push_back(appended[i]);
  Finish(summary, table, config, doc_rank);
  return summary;
}

PipelineResult Summarize(const Cluster &cluster, const ExtractorConfig &extractor,
                         const SummaryConfig &config, Execution execution) {
  config.Validate();
  PipelineResult result;
  result.profiles = ExtractProfiles(cluster, extractor, execution);
  result.table = BuildTopicTable(result.profiles, config.topic_score_mode, execution);
  result.summary = config.technique == Technique::kSenRich
                       ? ExtractSenRich(cluster, result.table, config, execution)
                       : ExtractDocRich(cluster, result.table, config, execution);
  return result;
}

void WriteSummaryText(const Summary &summary, std::ostream &out) {
  for (const SummarySentence &s : summary.sentences) out << s.text << '\n';
}

void WriteSummaryReport(const Summary &summary, std::ostream &out) {
  using nlohmann::ordered_json;
  for (const SummarySentence &s : summary.sentences) {
    ordered_json topics = ordered_json::array();
    for (const PhraseKey &key : s.contributing_topics) topics.push_back(JoinKey(key));
    ordered_json record;
    record["record"] = "sentence";
    record["doc_id"] = s.source_doc;
    record["position"] = s.position;
    record["score"] = s.score;
    record["words"] = s.word_count;
    record["topics"] = std::move(topics);
    record["text"] = s.text;
    out << record.dump() << '\n';
  }
  ordered_json record;
  record["record"] = "summary";
  record["technique"] = ToString(summary.technique);
  record["sentences"] = summary.sentences.size();
  record["word_count"] = summary.word_count;
  record["min_words"] = summary.min_words;
  record["max_words"] = summary.max_words;
  record["shortfall"] = summary.shortfall;
  record["centroid_doc"] = summary.centroid_doc;
  record["centroid_fraction"] = summary.CentroidFraction();
  record["diagnostics"] = summary.diagnostics;
  out << record.dump() << '\n';
}

}  // namespace mtsum
