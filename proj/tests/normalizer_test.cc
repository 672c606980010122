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

#include <gtest/gtest.h>

#include "mtsum/error.h"

namespace mtsum {
namespace {

TEST(CaseFoldNormalizerTest, FoldsCaseAndComposes) {
  const CaseFoldNormalizer n;
  EXPECT_EQ(n.Normalize("Tsunami"), "tsunami");
  EXPECT_EQ(n.Normalize("STRASSE"), "strasse");
  // "e" + combining acute composes to U+00E9.
  EXPECT_EQ(n.Normalize("Cafe\xCC\x81"), "caf\xC3\xA9");
  EXPECT_EQ(n.Normalize("زلزال"), "زلزال");
}

TEST(CaseFoldNormalizerTest, DeterministicAndNonEmpty) {
  const CaseFoldNormalizer n;
  for (const char *token : {"A", "ß", "İ", "٣", "x"}) {
    const std::string first = n.Normalize(token);
    EXPECT_FALSE(first.empty()) << token;
    EXPECT_EQ(first, n.Normalize(token));
  }
}

TEST(LightStemNormalizerTest, StripsSimpleSuffixesAndArticle) {
  const LightStemNormalizer n;
  EXPECT_EQ(n.Normalize("Buildings"), "building");
  EXPECT_EQ(n.Normalize("cities"), "city");
  EXPECT_EQ(n.Normalize("addresses"), "address");
  EXPECT_EQ(n.Normalize("glass"), "glass");
  EXPECT_EQ(n.Normalize("bus"), "bus");
  EXPECT_EQ(n.Normalize("الزلزال"), "زلزال");
  EXPECT_EQ(n.Normalize("s"), "s");
}

TEST(NormalizerRegistryTest, KnownAndUnknownNames) {
  for (const std::string &name : NormalizerNames()) {
    EXPECT_EQ(MakeNormalizer(name)->name(), name);
  }
  EXPECT_THROW(MakeNormalizer("porter"), Error);
}

}  // namespace
}  // namespace mtsum
