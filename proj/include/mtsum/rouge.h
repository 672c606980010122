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

#ifndef MTSUM_ROUGE_H_
#define MTSUM_ROUGE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtsum/normalizer.h"

namespace mtsum {

// A text as lemma sentences. Grams never cross sentence boundaries.
using LemmaText = std::vector<std::vector<std::string>>;
using Gram = std::vector<std::string>;

struct GramCounts {
  std::map<Gram, int> counts;
  int Total() const;
};

struct NGramMultiset : GramCounts {
  int n = 2;
};

struct SkipBigramMultiset : GramCounts {
  std::optional<int> max_skip;  // nullopt: unbounded gaps
};

NGramMultiset NGrams(const LemmaText &text, int n);

// Ordered pairs (i < j) within a sentence with j - i - 1 <= max_skip.
SkipBigramMultiset SkipBigrams(const LemmaText &text, std::optional<int> max_skip);

// Sum over grams of min(count in a, count in b).
int ClippedOverlap(const GramCounts &a, const GramCounts &b);

struct RougeScore {
  double precision = 0;
  double recall = 0;
  double f_measure = 0;

  static RougeScore FromCounts(int overlap, int candidate_total, int reference_total);
};

struct RougeResult {
  RougeScore mean;  // arithmetic mean over scored references
  RougeScore best;  // the scored reference with the highest F
  // One entry per reference; nullopt when the reference had no grams.
  std::vector<std::optional<RougeScore>> per_reference;
  std::vector<std::string> diagnostics;
};

RougeResult RougeN(const LemmaText &candidate, const std::vector<LemmaText> &references,
                   int n);
RougeResult RougeS(const LemmaText &candidate, const std::vector<LemmaText> &references,
                   std::optional<int> max_skip);

// Segments, tokenizes and normalizes raw text for scoring.
LemmaText ToLemmaText(std::string_view text, const Normalizer &normalizer);

}  // namespace mtsum

#endif  // MTSUM_ROUGE_H_
