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

#include "mtsum/text.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "mtsum/error.h"

namespace mtsum {
namespace {

using ::testing::ElementsAre;

std::string StripSpace(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\n' && c != '\t' && c != '\r') out.push_back(c);
  }
  return out;
}

TEST(SegmentSentencesTest, EmptyInput) { EXPECT_TRUE(SegmentSentences("").empty()); }

TEST(SegmentSentencesTest, SplitsAtTerminalPunctuation) {
  EXPECT_THAT(SegmentSentences("A. B? C!"), ElementsAre("A.", "B?", "C!"));
}

TEST(SegmentSentencesTest, NoTerminatorIsOneSentence) {
  EXPECT_THAT(SegmentSentences("One sentence no punct"), ElementsAre("One sentence no punct"));
}

TEST(SegmentSentencesTest, ArabicQuestionMark) {
  EXPECT_THAT(SegmentSentences("ما هذا؟ لا شيء."), ElementsAre("ما هذا؟", "لا شيء."));
}

TEST(SegmentSentencesTest, ParagraphBreakEndsSentence) {
  EXPECT_THAT(SegmentSentences("Heading line\n\nBody text\nwrapped on. Next"),
              ElementsAre("Heading line", "Body text\nwrapped on.", "Next"));
}

TEST(SegmentSentencesTest, KeepsClosersAndTerminatorRuns) {
  EXPECT_THAT(SegmentSentences("He said \"stop!\" Then?! left."),
              ElementsAre("He said \"stop!\"", "Then?!", "left."));
}

TEST(SegmentSentencesTest, DecimalPointDoesNotSplit) {
  EXPECT_THAT(SegmentSentences("Magnitude 7.8 quake. Done"),
              ElementsAre("Magnitude 7.8 quake.", "Done"));
}

TEST(SegmentSentencesTest, RejectsInvalidUtf8) {
  EXPECT_THROW(SegmentSentences("bad \xff byte"), Error);
}

TEST(SegmentSentencesTest, CoversAllNonWhitespaceContent) {
  std::mt19937 rng(7);
  const std::string alphabet = "ab .!?\n\"')";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (int i = 0; i < 40; ++i) text.push_back(alphabet[pick(rng)]);
    std::string joined;
    for (const std::string &s : SegmentSentences(text)) {
      ASSERT_FALSE(s.empty());
      joined += s;
    }
    EXPECT_EQ(StripSpace(joined), StripSpace(text)) << text;
  }
}

TEST(TokenizeTest, RecordsPunctuationBoundary) {
  const TokenizedText t = Tokenize("Tsunami hit, badly.");
  EXPECT_THAT(t.tokens, ElementsAre("Tsunami", "hit", "badly"));
  ASSERT_EQ(t.break_after.size(), 3u);
  EXPECT_FALSE(t.break_after[0]);
  EXPECT_TRUE(t.break_after[1]);
}

TEST(TokenizeTest, EmptyAndPlain) {
  EXPECT_TRUE(Tokenize("").tokens.empty());
  const TokenizedText t = Tokenize("a b");
  EXPECT_THAT(t.tokens, ElementsAre("a", "b"));
  EXPECT_THAT(t.break_after, ElementsAre(false, false));
}

TEST(TokenizeTest, JoinersSplitWithoutBreak) {
  const TokenizedText t = Tokenize("low-lying coast's edge");
  EXPECT_THAT(t.tokens, ElementsAre("low", "lying", "coast", "s", "edge"));
  EXPECT_THAT(t.break_after, ElementsAre(false, false, false, false, false));
}

TEST(TokenizeTest, UnicodeLettersAndMarks) {
  const TokenizedText t = Tokenize("Café, زلزالٌ قوي");
  EXPECT_THAT(t.tokens, ElementsAre("Café", "زلزالٌ", "قوي"));
  EXPECT_TRUE(t.break_after[0]);
}

TEST(TextTest, QuestionDetection) {
  EXPECT_TRUE(EndsWithQuestionMark("Is it safe?"));
  EXPECT_TRUE(EndsWithQuestionMark("\"Is it safe?\""));
  EXPECT_TRUE(EndsWithQuestionMark("هل هو آمن؟"));
  EXPECT_FALSE(EndsWithQuestionMark("It is safe."));
}

TEST(TextTest, Numeric) {
  EXPECT_TRUE(IsNumeric("2011"));
  EXPECT_TRUE(IsNumeric("٢٠١١"));
  EXPECT_FALSE(IsNumeric("3rd"));
  EXPECT_FALSE(IsNumeric(""));
}

TEST(TextTest, CollapseWhitespace) {
  EXPECT_EQ(CollapseWhitespace("  a\n\tb   c "), "a b c");
}

}  // namespace
}  // namespace mtsum
