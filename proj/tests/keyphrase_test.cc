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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mtsum/error.h"
#include "oracles.h"

namespace mtsum {
namespace {

using ::testing::UnorderedElementsAre;

Document Doc(std::string_view text) { return BuildDocument("doc", text, CaseFoldNormalizer()); }

std::vector<PhraseKey> Keys(const std::vector<CandidatePhrase> &candidates) {
  std::vector<PhraseKey> keys;
  for (const auto &c : candidates) keys.push_back(c.lemmas);
  return keys;
}

const CandidatePhrase &Find(const std::vector<CandidatePhrase> &candidates, const PhraseKey &key) {
  for (const auto &c : candidates) {
    if (c.lemmas == key) return c;
  }
  throw std::runtime_error("missing candidate " + JoinKey(key));
}

TEST(GenerateCandidatesTest, AllNGramsOfTwoWordSentence) {
  EXPECT_THAT(Keys(GenerateCandidates(Doc("social networks"), {})),
              UnorderedElementsAre(PhraseKey{"social"}, PhraseKey{"networks"},
                                   PhraseKey{"social", "networks"}));
}

TEST(GenerateCandidatesTest, StopwordsCannotStartOrEnd) {
  ExtractorConfig config;
  config.stopwords = {"the"};
  EXPECT_THAT(Keys(GenerateCandidates(Doc("the sea"), config)),
              UnorderedElementsAre(PhraseKey{"sea"}));
}

TEST(GenerateCandidatesTest, StopwordAllowedInside) {
  ExtractorConfig config;
  config.stopwords = {"of"};
  const auto keys = Keys(GenerateCandidates(Doc("port of kessa"), config));
  EXPECT_THAT(keys, UnorderedElementsAre(PhraseKey{"port"}, PhraseKey{"kessa"},
                                         PhraseKey{"port", "of", "kessa"}));
}

TEST(GenerateCandidatesTest, EmptyDocument) {
  EXPECT_TRUE(GenerateCandidates(Doc(""), {}).empty());
}

TEST(GenerateCandidatesTest, RespectsBoundariesNumbersAndMaxNgram) {
  ExtractorConfig config;
  config.max_ngram = 2;
  const auto keys = Keys(GenerateCandidates(Doc("quake hit, 2011 coast"), config));
  EXPECT_THAT(keys, UnorderedElementsAre(PhraseKey{"quake"}, PhraseKey{"hit"},
                                         PhraseKey{"quake", "hit"}, PhraseKey{"coast"},
                                         PhraseKey{"2011", "coast"}));
}

TEST(GenerateCandidatesTest, AggregatesOccurrences) {
  const auto candidates = GenerateCandidates(Doc("sea wall. the sea wall fell. sea"), {});
  const CandidatePhrase &sea = Find(candidates, {"sea"});
  EXPECT_EQ(sea.surface_frequency, 3);
  EXPECT_EQ(sea.first_occurrence, (TokenLocation{0, 0}));
  const CandidatePhrase &wall_fell = Find(candidates, {"wall", "fell"});
  EXPECT_EQ(wall_fell.surface_frequency, 1);
  EXPECT_EQ(wall_fell.first_occurrence, (TokenLocation{1, 2}));
}

TEST(ComputeFeaturesTest, FirstSentenceSingleWord) {
  // Ten sentences; "alpha" opens the 4-token first sentence and recurs once.
  const Document doc = Doc("alpha b c d. alpha x. s. s. s. s. s. s. s. y z.");
  ASSERT_EQ(doc.length_sentences(), 10u);
  const auto candidates = GenerateCandidates(doc, {});
  const FeatureVector f = ComputeFeatures(Find(candidates, {"alpha"}), doc);
  EXPECT_EQ(f.num_words, 1);
  EXPECT_EQ(f.phrase_frequency, 2);
  EXPECT_EQ(f.max_word_frequency, 2);
  EXPECT_DOUBLE_EQ(f.sentence_location, 1.0);
  EXPECT_DOUBLE_EQ(f.phrase_location, 1.0);
  EXPECT_DOUBLE_EQ(f.relative_length, 0.25);
  EXPECT_EQ(f.verb_content, 0);
  EXPECT_EQ(f.is_question, 0);

  const FeatureVector last = ComputeFeatures(Find(candidates, {"z"}), doc);
  EXPECT_DOUBLE_EQ(last.sentence_location, 1.0 - 9.0 / 10.0);
  EXPECT_DOUBLE_EQ(last.phrase_location, 0.5);
}

TEST(ComputeFeaturesTest, WholeSentencePhraseAndQuestion) {
  const Document doc = Doc("intro words here. did sea rise?");
  const auto candidates = GenerateCandidates(doc, {});
  const FeatureVector f = ComputeFeatures(Find(candidates, {"did", "sea", "rise"}), doc);
  EXPECT_DOUBLE_EQ(f.relative_length, 1.0);
  EXPECT_EQ(f.is_question, 1.0);
  EXPECT_DOUBLE_EQ(f.sentence_location, 0.5);
}

TEST(ComputeFeaturesTest, MaxWordFrequencyTakesMostFrequentWord) {
  const Document doc = Doc("sea wall. sea. sea. wall");
  const auto candidates = GenerateCandidates(doc, {});
  EXPECT_EQ(ComputeFeatures(Find(candidates, {"sea", "wall"}), doc).max_word_frequency, 3);
}

TEST(RankKeyphrasesTest, DividesByMaximum) {
  const Document doc = Doc("a b");
  std::vector<CandidatePhrase> candidates = {{{"a"}, {0, 0}, 1}, {{"b"}, {0, 1}, 1}};
  const DocumentProfile p = RankKeyphrases(doc, candidates, {2.0, 4.0}, 15);
  ASSERT_EQ(p.np(), 2u);
  EXPECT_EQ(p.keyphrases[0].lemmas, PhraseKey{"b"});
  EXPECT_DOUBLE_EQ(p.keyphrases[0].local_score, 1.0);
  EXPECT_DOUBLE_EQ(p.keyphrases[1].local_score, 0.5);
}

TEST(RankKeyphrasesTest, TieBreaksPreferLongerThenEarlierThenLexicographic) {
  const Document doc = Doc("a b c");
  std::vector<CandidatePhrase> candidates = {{{"c"}, {0, 2}, 1},
                                             {{"a"}, {0, 0}, 1},
                                             {{"b", "c"}, {0, 1}, 1},
                                             {{"b"}, {0, 0}, 1}};
  const DocumentProfile p = RankKeyphrases(doc, candidates, {1, 1, 1, 1}, 15);
  EXPECT_EQ(p.keyphrases[0].lemmas, (PhraseKey{"b", "c"}));
  EXPECT_EQ(p.keyphrases[1].lemmas, PhraseKey{"a"});
  EXPECT_EQ(p.keyphrases[2].lemmas, PhraseKey{"b"});
  EXPECT_EQ(p.keyphrases[3].lemmas, PhraseKey{"c"});
}

TEST(RankKeyphrasesTest, KeepsTopK) {
  const Document doc = Doc("a b c");
  std::vector<CandidatePhrase> candidates = {
      {{"a"}, {0, 0}, 1}, {{"b"}, {0, 1}, 1}, {{"c"}, {0, 2}, 1}};
  EXPECT_EQ(RankKeyphrases(doc, candidates, {3, 2, 1}, 2).np(), 2u);
}

TEST(ScoreKeyphrasesTest, SingleCandidateScoresOne) {
  const DocumentProfile p = ScoreKeyphrases(Doc("tsunami."), {});
  ASSERT_EQ(p.np(), 1u);
  EXPECT_DOUBLE_EQ(p.keyphrases[0].local_score, 1.0);
  EXPECT_EQ(p.keyphrases[0].source_doc, "doc");
}

TEST(ScoreKeyphrasesTest, NoCandidatesIsAnError) {
  ExtractorConfig config;
  config.stopwords = {"the"};
  EXPECT_THROW(ScoreKeyphrases(Doc("the. 42."), config), Error);
}

TEST(ScoreKeyphrasesTest, RejectsInvalidConfig) {
  ExtractorConfig config;
  config.feature_weights.fill(0);
  EXPECT_THROW(ScoreKeyphrases(Doc("a"), config), Error);
  config = {};
  config.top_k = 0;
  EXPECT_THROW(ScoreKeyphrases(Doc("a"), config), Error);
  config = {};
  config.feature_weights[2] = -1;
  EXPECT_THROW(ScoreKeyphrases(Doc("a"), config), Error);
}

TEST(RawScoresTest, EveryTermIsInUnitRange) {
  const Document doc = Doc("sea wall fell. the sea rose again and again. wall");
  const auto candidates = GenerateCandidates(doc, {});
  std::vector<FeatureVector> features;
  for (const auto &c : candidates) features.push_back(ComputeFeatures(c, doc));
  for (std::size_t k = 0; k < kNumFeatures; ++k) {
    std::array<double, kNumFeatures> one_hot{};
    one_hot[k] = 1.0;
    for (double score : RawScores(features, one_hot)) {
      EXPECT_GE(score, 0.0);
      EXPECT_LE(score, 1.0);
    }
  }
}

class ProfilePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(ProfilePropertyTest, BoundsUniquenessAndScaleCovariance) {
  std::mt19937 rng(static_cast<unsigned>(GetParam()));
  oracle::SyntheticShape shape;
  shape.max_docs = 1;
  shape.max_sentences = 8;
  const Document doc = oracle::RandomCluster(rng, shape).documents[0];

  ExtractorConfig config;
  std::uniform_real_distribution<double> weight(0.0, 2.0);
  for (double &w : config.feature_weights) w = weight(rng);
  config.top_k = 6;
  const DocumentProfile p = ScoreKeyphrases(doc, config);

  ASSERT_GE(p.np(), 1u);
  EXPECT_LE(p.np(), 6u);
  double max_ls = 0;
  std::set<PhraseKey> keys;
  for (const auto &k : p.keyphrases) {
    EXPECT_GE(k.local_score, 0.0);
    EXPECT_LE(k.local_score, 1.0);
    max_ls = std::max(max_ls, k.local_score);
    EXPECT_TRUE(keys.insert(k.lemmas).second) << "duplicate key " << JoinKey(k.lemmas);
  }
  EXPECT_EQ(max_ls, 1.0);

  for (double c : {0.5, 2.0, 3.7}) {
    ExtractorConfig scaled = config;
    for (double &w : scaled.feature_weights) w *= c;
    const DocumentProfile q = ScoreKeyphrases(doc, scaled);
    ASSERT_EQ(q.np(), p.np());
    for (std::size_t i = 0; i < p.np(); ++i) {
      // Near-ties may swap under rounding; compare scores by rank.
      EXPECT_NEAR(q.keyphrases[i].local_score, p.keyphrases[i].local_score, 1e-12);
    }
  }

  EXPECT_EQ(ScoreKeyphrases(doc, config).keyphrases.size(), p.np());
}

INSTANTIATE_TEST_SUITE_P(Seeds, ProfilePropertyTest, ::testing::Range(1, 41));

TEST(ExtractProfilesTest, ParallelMatchesSerial) {
  std::mt19937 rng(99);
  oracle::SyntheticShape shape;
  shape.max_docs = 3;
  for (int trial = 0; trial < 10; ++trial) {
    const Cluster cluster = oracle::RandomCluster(rng, shape);
    const auto serial = ExtractProfiles(cluster, {}, Execution::kSerial);
    const auto parallel = ExtractProfiles(cluster, {}, Execution::kParallel);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t d = 0; d < serial.size(); ++d) {
      ASSERT_EQ(serial[d].np(), parallel[d].np());
      for (std::size_t i = 0; i < serial[d].np(); ++i) {
        EXPECT_EQ(serial[d].keyphrases[i].lemmas, parallel[d].keyphrases[i].lemmas);
        EXPECT_EQ(serial[d].keyphrases[i].local_score, parallel[d].keyphrases[i].local_score);
      }
    }
  }
}

TEST(ExtractProfilesTest, ErrorInOneDocumentPropagates) {
  ExtractorConfig config;
  config.stopwords = {"the"};
  const Cluster cluster =
      BuildCluster("c", {{"a", "sea wall."}, {"b", "the."}}, CaseFoldNormalizer());
  EXPECT_THROW(ExtractProfiles(cluster, config, Execution::kParallel), Error);
  EXPECT_THROW(ExtractProfiles(cluster, config, Execution::kSerial), Error);
}

}  // namespace
}  // namespace mtsum
