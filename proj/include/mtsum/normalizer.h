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

#ifndef MTSUM_NORMALIZER_H_
#define MTSUM_NORMALIZER_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mtsum {

// Maps a surface token to the lemma used for all matching and counting.
// Implementations must be deterministic and must return a non-empty lemma
// for a non-empty token.
class Normalizer {
 public:
  virtual ~Normalizer() = default;
  virtual std::string name() const = 0;
  virtual std::string Normalize(std::string_view token) const = 0;
};

// Unicode NFC followed by full case folding. No stemming.
class CaseFoldNormalizer : public Normalizer {
 public:
  std::string name() const override { return "casefold"; }
  std::string Normalize(std::string_view token) const override;
};

// Case folding plus a few suffix/prefix rules: English plural endings and
// the Arabic definite article. Meant as a cheap stand-in for a real
// lemmatizer.
class LightStemNormalizer : public Normalizer {
 public:
  std::string name() const override { return "light-stem"; }
  std::string Normalize(std::string_view token) const override;
};

// Returns the normalizer registered under `name` ("casefold",
// "light-stem"). Throws Error for unknown names.
std::unique_ptr<Normalizer> MakeNormalizer(std::string_view name);
std::vector<std::string> NormalizerNames();

// Counts verbs for the verb-content keyphrase feature. The default tagger
// knows no verbs, so the feature is constant zero unless a real tagger is
// plugged in.
class VerbTagger {
 public:
  virtual ~VerbTagger() = default;
  virtual bool IsVerb(std::string_view token, std::string_view lemma) const = 0;
};

class NullVerbTagger : public VerbTagger {
 public:
  bool IsVerb(std::string_view, std::string_view) const override {
    return false;
  }
};

}  // namespace mtsum

#endif  // MTSUM_NORMALIZER_H_
