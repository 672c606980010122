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

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <cstdint>

#include "mtsum/error.h"

namespace mtsum {
namespace {

// Decodes the code point at offset i and advances i. Returns a negative
// value on malformed input.
UChar32 Next(std::string_view text, int32_t &i) {
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t *>(text.data()), i,
          static_cast<int32_t>(text.size()), c);
  return c;
}

bool IsTerminator(UChar32 c) {
  return c == '.' || c == '!' || c == '?' || c == 0x061F;
}

bool IsCloser(UChar32 c) {
  switch (c) {
    case '"':
    case '\'':
    case ')':
    case ']':
    case 0x2019:  // right single quotation mark
    case 0x201D:  // right double quotation mark
    case 0x00BB:  // right guillemet
      return true;
    default:
      return false;
  }
}

bool IsSpace(UChar32 c) { return u_isUWhiteSpace(c); }

bool IsWordChar(UChar32 c) { return u_isalnum(c); }

bool IsMark(UChar32 c) {
  const int8_t type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK ||
         type == U_ENCLOSING_MARK;
}

// Punctuation that separates words inside a phrase without breaking it.
bool IsJoiner(UChar32 c) {
  if (c == '\'' || c == 0x2019) return true;
  const int8_t type = u_charType(c);
  return type == U_DASH_PUNCTUATION || type == U_CONNECTOR_PUNCTUATION;
}

std::string_view Trim(std::string_view s) {
  // Only ASCII and common Unicode spaces matter here; the segmenter already
  // cut at code point boundaries.
  int32_t begin = 0;
  const auto n = static_cast<int32_t>(s.size());
  while (begin < n) {
    int32_t next = begin;
    if (!IsSpace(Next(s, next))) break;
    begin = next;
  }
  int32_t end = begin;
  int32_t i = begin;
  while (i < n) {
    const UChar32 c = Next(s, i);
    if (!IsSpace(c)) end = i;
  }
  return s.substr(begin, end - begin);
}

}  // namespace

void ValidateUtf8(std::string_view text, std::string_view what) {
  int32_t i = 0;
  const auto n = static_cast<int32_t>(text.size());
  while (i < n) {
    if (Next(text, i) < 0) {
      throw Error("invalid UTF-8 in " + std::string(what));
    }
  }
}

std::vector<std::string> SegmentSentences(std::string_view text) {
  ValidateUtf8(text, "input text");
  std::vector<std::string> sentences;
  const auto n = static_cast<int32_t>(text.size());
  int32_t start = 0;

  auto emit = [&](int32_t end) {
    std::string_view piece = Trim(text.substr(start, end - start));
    if (!piece.empty()) sentences.emplace_back(piece);
    start = end;
  };

  int32_t i = 0;
  while (i < n) {
    const int32_t here = i;
    const UChar32 c = Next(text, i);
    if (IsTerminator(c)) {
      // Absorb the rest of the terminator run and any closers.
      int32_t end = i;
      while (end < n) {
        int32_t probe = end;
        const UChar32 d = Next(text, probe);
        if (!IsTerminator(d) && !IsCloser(d)) break;
        end = probe;
      }
      bool at_boundary = end == n;
      if (!at_boundary) {
        int32_t probe = end;
        at_boundary = IsSpace(Next(text, probe));
      }
      i = end;
      if (at_boundary) emit(end);
    } else if (c == '\n') {
      // A blank line (possibly holding other whitespace) ends a paragraph.
      int32_t probe = i;
      while (probe < n) {
        int32_t next = probe;
        const UChar32 d = Next(text, next);
        if (d == '\n') {
          emit(here);
          break;
        }
        if (!IsSpace(d)) break;
        probe = next;
      }
    }
  }
  emit(n);
  return sentences;
}

TokenizedText Tokenize(std::string_view sentence) {
  TokenizedText out;
  const auto n = static_cast<int32_t>(sentence.size());
  int32_t i = 0;
  int32_t token_start = -1;
  bool pending_break = false;

  auto close_token = [&](int32_t end) {
    if (token_start < 0) return;
    out.tokens.emplace_back(sentence.substr(token_start, end - token_start));
    out.break_after.push_back(false);
    token_start = -1;
  };

  while (i < n) {
    const int32_t here = i;
    const UChar32 c = Next(sentence, i);
    if (c < 0) throw Error("invalid UTF-8 in sentence");
    if (IsWordChar(c) || (token_start >= 0 && IsMark(c))) {
      if (token_start < 0) {
        if (pending_break && !out.break_after.empty()) {
          out.break_after.back() = true;
        }
        pending_break = false;
        token_start = here;
      }
      continue;
    }
    close_token(here);
    if (u_ispunct(c) && !IsJoiner(c)) pending_break = true;
  }
  close_token(n);
  if (pending_break && !out.break_after.empty()) out.break_after.back() = true;
  return out;
}

bool EndsWithQuestionMark(std::string_view sentence) {
  UChar32 last_significant = 0;
  int32_t i = 0;
  const auto n = static_cast<int32_t>(sentence.size());
  while (i < n) {
    const UChar32 c = Next(sentence, i);
    if (!IsSpace(c) && !IsCloser(c)) last_significant = c;
  }
  return last_significant == '?' || last_significant == 0x061F;
}

bool IsNumeric(std::string_view token) {
  if (token.empty()) return false;
  int32_t i = 0;
  const auto n = static_cast<int32_t>(token.size());
  while (i < n) {
    if (!u_isdigit(Next(token, i))) return false;
  }
  return true;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  int32_t i = 0;
  const auto n = static_cast<int32_t>(text.size());
  while (i < n) {
    const int32_t here = i;
    const UChar32 c = Next(text, i);
    if (IsSpace(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.append(text.substr(here, i - here));
  }
  return out;
}

}  // namespace mtsum
