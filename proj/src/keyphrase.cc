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

#include "mtsum/keyphrase.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "mtsum/error.h"
#include "mtsum/text.h"

namespace mtsum {

std::string JoinKey(const PhraseKey &key) {
  std::string out;
  for (const std::string &lemma : key) {
    if (!out.empty()) out.push_back(' ');
    out += lemma;
  }
  return out;
}

std::array<double, kNumFeatures> FeatureVector::AsArray() const {
  return {num_words,         phrase_frequency, max_word_frequency,
          sentence_location, phrase_location,  relative_length,
          verb_content,      is_question};
}

void ExtractorConfig::Validate() const {
  bool any_positive = false;
  for (double w : feature_weights) {
    if (!std::isfinite(w) || w < 0) {
      throw Error("feature weights must be finite and non-negative");
    }
    any_positive |= w > 0;
  }
  if (!any_positive) throw Error("at least one feature weight must be positive");
  if (top_k < 1) throw Error("top_k must be at least 1");
  if (max_ngram < 1 || max_ngram > 3) {
    throw Error("max_ngram must be between 1 and 3");
  }
}

std::vector<CandidatePhrase> GenerateCandidates(const Document &document,
                                                const ExtractorConfig &config) {
  std::map<PhraseKey, std::size_t> index;
  std::vector<CandidatePhrase> candidates;

  auto is_stop = [&](const std::string &lemma) {
    return config.stopwords.count(lemma) > 0;
  };

  for (const Sentence &sentence : document.sentences) {
    const auto &lemmas = sentence.lemmas;
    const int size = static_cast<int>(lemmas.size());
    for (int start = 0; start < size; ++start) {
      if (is_stop(lemmas[start])) continue;
      bool has_word = false;
      for (int n = 1; n <= config.max_ngram && start + n <= size; ++n) {
        const int last = start + n - 1;
        if (n > 1 && sentence.break_after[last - 1]) break;
        has_word |= !IsNumeric(lemmas[last]);
        if (is_stop(lemmas[last]) || !has_word) continue;

        PhraseKey key(lemmas.begin() + start, lemmas.begin() + last + 1);
        auto [it, inserted] = index.try_emplace(key, candidates.size());
        if (inserted) {
          candidates.push_back({std::move(key), {sentence.index, start}, 1});
        } else {
          ++candidates[it->second].surface_frequency;
        }
      }
    }
  }
  return candidates;
}

FeatureVector ComputeFeatures(const CandidatePhrase &candidate,
                              const Document &document) {
  FeatureVector f;
  const Sentence &sentence =
      document.sentences.at(static_cast<std::size_t>(candidate.first_occurrence.sentence));
  const double words = static_cast<double>(candidate.lemmas.size());
  const double sentence_length = static_cast<double>(sentence.word_count());
  const double ld = static_cast<double>(document.length_sentences());

  f.num_words = words;
  f.phrase_frequency = candidate.surface_frequency;

  int max_word_frequency = 0;
  for (const std::string &lemma : candidate.lemmas) {
    int count = 0;
    for (const Sentence &s : document.sentences) {
      count += static_cast<int>(std::count(s.lemmas.begin(), s.lemmas.end(), lemma));
    }
    max_word_frequency = std::max(max_word_frequency, count);
  }
  f.max_word_frequency = max_word_frequency;

  f.sentence_location = 1.0 - candidate.first_occurrence.sentence / ld;
  f.phrase_location = 1.0 - candidate.first_occurrence.offset / sentence_length;
  f.relative_length = std::clamp(words / sentence_length, 0.0, 1.0);
  f.verb_content = sentence.verb_count;
  f.is_question = sentence.is_question ? 1.0 : 0.0;
  return f;
}

std::vector<double> RawScores(const std::vector<FeatureVector> &features,
                              const std::array<double, kNumFeatures> &weights) {
  // Features divided by their document maxima before weighting.
  constexpr std::array<bool, kNumFeatures> kMaxNormalized{
      true, true, true, false, false, false, true, false};

  std::array<double, kNumFeatures> maxima{};
  for (const FeatureVector &f : features) {
    const auto values = f.AsArray();
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      maxima[k] = std::max(maxima[k], values[k]);
    }
  }

  std::vector<double> scores;
  scores.reserve(features.size());
  for (const FeatureVector &f : features) {
    const auto values = f.AsArray();
    double score = 0;
    for (std::size_t k = 0; k < kNumFeatures; ++k) {
      double value = values[k];
      if (kMaxNormalized[k]) value = maxima[k] > 0 ? value / maxima[k] : 0.0;
      score += weights[k] * value;
    }
    scores.push_back(score);
  }
  return scores;
}

DocumentProfile RankKeyphrases(const Document &document,
                               std::vector<CandidatePhrase> candidates,
                               const std::vector<double> &raw_scores, int top_k) {
  if (candidates.empty()) {
    throw Error("no candidates in document " + document.doc_id);
  }
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw_scores[a] != raw_scores[b]) return raw_scores[a] > raw_scores[b];
    const auto &ca = candidates[a];
    const auto &cb = candidates[b];
    if (ca.lemmas.size() != cb.lemmas.size()) {
      return ca.lemmas.size() > cb.lemmas.size();
    }
    if (ca.first_occurrence != cb.first_occurrence) {
      return ca.first_occurrence < cb.first_occurrence;
    }
    return ca.lemmas < cb.lemmas;
  });
  order.resize(std::min(order.size(), static_cast<std::size_t>(top_k)));

  DocumentProfile profile;
  profile.doc_id = document.doc_id;
  profile.length_sentences = document.length_sentences();
  const double best = raw_scores[order.front()];
  for (std::size_t i : order) {
    ScoredKeyphrase phrase;
    phrase.lemmas = std::move(candidates[i].lemmas);
    // All-zero scores are a full tie; every phrase is then maximal.
    phrase.local_score = best > 0 ? raw_scores[i] / best : 1.0;
    phrase.source_doc = document.doc_id;
    phrase.first_sentence = candidates[i].first_occurrence.sentence;
    profile.keyphrases.push_back(std::move(phrase));
  }
  return profile;
}

DocumentProfile ScoreKeyphrases(const Document &document,
                                const ExtractorConfig &config) {
  config.Validate();
  std::vector<CandidatePhrase> candidates = GenerateCandidates(document, config);
  std::vector<FeatureVector> features;
  features.reserve(candidates.size());
  for (const CandidatePhrase &candidate : candidates) {
    features.push_back(ComputeFeatures(candidate, document));
  }
  const std::vector<double> raw = RawScores(features, config.feature_weights);
  return RankKeyphrases(document, std::move(candidates), raw, config.top_k);
}

std::vector<DocumentProfile> ExtractProfiles(const Cluster &cluster,
                                             const ExtractorConfig &config,
                                             Execution execution) {
  config.Validate();
  std::vector<DocumentProfile> profiles(cluster.documents.size());
  ForEachIndex(cluster.documents.size(), execution, [&](std::size_t i) {
    profiles[i] = ScoreKeyphrases(cluster.documents[i], config);
  });
  return profiles;
}

}  // namespace mtsum
