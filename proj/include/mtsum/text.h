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

#ifndef MTSUM_TEXT_H_
#define MTSUM_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace mtsum {

// Splits text into raw sentence strings. A sentence ends after a run of
// terminal punctuation (. ! ? and the Arabic question mark) followed by
// whitespace or end of text, or at a paragraph break (a blank line).
// Closing quotes and brackets directly after the terminator stay with the
// sentence. Abbreviations are not recognized, so "Dr. Smith" splits.
// Returned strings are trimmed and never empty. Throws Error on invalid
// UTF-8.
std::vector<std::string> SegmentSentences(std::string_view text);

// Tokens of one sentence. break_after[i] is set when punctuation separates
// token i from token i + 1 (or ends the sentence after it); candidate
// phrases never span such a break.
struct TokenizedText {
  std::vector<std::string> tokens;
  std::vector<bool> break_after;
};

// Tokens are maximal runs of Unicode letters and digits; combining marks
// directly after a letter or digit stay in the token. Punctuation is
// dropped and recorded in break_after. Apostrophes, hyphens and connector
// punctuation split words without recording a break.
TokenizedText Tokenize(std::string_view sentence);

// True when the sentence ends in a Latin or Arabic question mark, ignoring
// trailing closing quotes and brackets.
bool EndsWithQuestionMark(std::string_view sentence);

// True when every code point of the string is a decimal digit.
bool IsNumeric(std::string_view token);

// Collapses internal whitespace runs to single spaces.
std::string CollapseWhitespace(std::string_view text);

// Throws Error naming `what` if text is not valid UTF-8.
void ValidateUtf8(std::string_view text, std::string_view what);

}  // namespace mtsum

#endif  // MTSUM_TEXT_H_
