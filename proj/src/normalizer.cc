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

#include "mtsum/normalizer.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "mtsum/error.h"

namespace mtsum {
namespace {

icu::UnicodeString FoldNfc(std::string_view token) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(token.data(), static_cast<int32_t>(token.size())));
  icu::UnicodeString folded = nfc->normalize(text, status);
  folded.foldCase();
  folded = nfc->normalize(folded, status);
  if (U_FAILURE(status)) throw Error("ICU normalization failed");
  return folded;
}

std::string ToUtf8(const icu::UnicodeString &s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

bool EndsWith(const icu::UnicodeString &s, const char *suffix) {
  return s.endsWith(icu::UnicodeString(suffix, -1, icu::UnicodeString::kInvariant));
}

}  // namespace

std::string CaseFoldNormalizer::Normalize(std::string_view token) const {
  std::string lemma = ToUtf8(FoldNfc(token));
  return lemma.empty() ? std::string(token) : lemma;
}

std::string LightStemNormalizer::Normalize(std::string_view token) const {
  icu::UnicodeString s = FoldNfc(token);
  const int32_t length = s.countChar32();

  // Arabic definite article "al-" (alef + lam).
  static const icu::UnicodeString kArticle(u"ال");
  if (s.startsWith(kArticle) && length >= 4) {
    s.remove(0, kArticle.length());
  } else if (length > 4 && EndsWith(s, "ies")) {
    s.replaceBetween(s.length() - 3, s.length(), icu::UnicodeString(u"y"));
  } else if (length > 4 && EndsWith(s, "sses")) {
    s.truncate(s.length() - 2);
  } else if (length > 3 && EndsWith(s, "s") && !EndsWith(s, "ss") &&
             !EndsWith(s, "us") && !EndsWith(s, "is")) {
    s.truncate(s.length() - 1);
  }
  std::string lemma = ToUtf8(s);
  return lemma.empty() ? std::string(token) : lemma;
}

std::unique_ptr<Normalizer> MakeNormalizer(std::string_view name) {
  if (name == "casefold") return std::make_unique<CaseFoldNormalizer>();
  if (name == "light-stem") return std::make_unique<LightStemNormalizer>();
  throw Error("unknown normalizer: " + std::string(name));
}

std::vector<std::string> NormalizerNames() { return {"casefold", "light-stem"}; }

}  // namespace mtsum
