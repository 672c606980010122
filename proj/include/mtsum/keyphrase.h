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

#ifndef MTSUM_KEYPHRASE_H_
#define MTSUM_KEYPHRASE_H_

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "mtsum/corpus.h"
#include "mtsum/execution.h"

namespace mtsum {

// A phrase identified by its lemma sequence.
using PhraseKey = std::vector<std::string>;

// Lemmas joined by single spaces, for display and reports.
std::string JoinKey(const PhraseKey &key);

struct TokenLocation {
  int sentence = 0;
  int offset = 0;
  auto operator<=>(const TokenLocation &) const = default;
};

struct CandidatePhrase {
  PhraseKey lemmas;
  TokenLocation first_occurrence;
  int surface_frequency = 0;
};

inline constexpr std::size_t kNumFeatures = 8;

// Local keyphrase features, in weight order.
struct FeatureVector {
  double num_words = 0;           // words in the phrase
  double phrase_frequency = 0;    // occurrences of the phrase
  double max_word_frequency = 0;  // most frequent single word of the phrase
  double sentence_location = 0;   // 1 - first sentence / Ld
  double phrase_location = 0;     // 1 - offset / sentence length
  double relative_length = 0;     // phrase length / sentence length
  double verb_content = 0;        // verbs in the first containing sentence
  double is_question = 0;         // first containing sentence is a question

  std::array<double, kNumFeatures> AsArray() const;
};

struct ExtractorConfig {
  // Default weights: uniform, with the verb and question features off since
  // the default tagger reports no verbs.
  std::array<double, kNumFeatures> feature_weights{1, 1, 1, 1, 1, 1, 0, 0};
  std::unordered_set<std::string> stopwords;  // lemmas
  int top_k = 15;
  int max_ngram = 3;

  // Throws Error unless weights are finite and non-negative with at least
  // one positive, top_k >= 1 and 1 <= max_ngram <= 3.
  void Validate() const;
};

struct ScoredKeyphrase {
  PhraseKey lemmas;
  double local_score = 0;  // LS in [0, 1]
  std::string source_doc;
  int first_sentence = 0;
};

// A document reduced to its ranked keyphrases.
struct DocumentProfile {
  std::string doc_id;
  std::vector<ScoredKeyphrase> keyphrases;  // descending score
  std::size_t length_sentences = 0;

  std::size_t np() const { return keyphrases.size(); }
};

// Contiguous lemma n-grams (n <= max_ngram) within one sentence that do not
// cross a punctuation break, do not start or end with a stopword and hold at
// least one non-numeric lemma. Deduplicated by lemma sequence, ordered by
// first occurrence then length.
std::vector<CandidatePhrase> GenerateCandidates(const Document &document,
                                                const ExtractorConfig &config);

FeatureVector ComputeFeatures(const CandidatePhrase &candidate,
                              const Document &document);

// Ranks candidates by raw score (descending; ties: longer phrase, earlier
// first occurrence, lexicographic lemmas), keeps top_k and divides by the
// maximum. `raw_scores` is parallel to `candidates`.
DocumentProfile RankKeyphrases(const Document &document,
                               std::vector<CandidatePhrase> candidates,
                               const std::vector<double> &raw_scores, int top_k);

// Raw scores as a weighted sum of features. Phrase length, frequency,
// max word frequency and verb content are divided by their maxima over the
// document's candidates first, so every term lies in [0, 1].
std::vector<double> RawScores(const std::vector<FeatureVector> &features,
                              const std::array<double, kNumFeatures> &weights);

// Full local extraction for one document. Throws Error("no candidates ...")
// when the document yields no candidate phrase.
DocumentProfile ScoreKeyphrases(const Document &document,
                                const ExtractorConfig &config);

// One profile per document, in cluster order.
std::vector<DocumentProfile> ExtractProfiles(
    const Cluster &cluster, const ExtractorConfig &config,
    Execution execution = Execution::kParallel);

}  // namespace mtsum

#endif  // MTSUM_KEYPHRASE_H_
