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

#include "mtsum/rouge.h"

#include <algorithm>
#include <numeric>

#include "mtsum/error.h"
#include "mtsum/text.h"

namespace mtsum {
namespace {

template <typename Counts>
RougeResult Score(const Counts &candidate, const std::vector<Counts> &references) {
  if (references.empty()) throw Error("at least one reference is required");
  RougeResult result;
  const int candidate_total = candidate.Total();
  int scored = 0;
  for (std::size_t r = 0; r < references.size(); ++r) {
    const int reference_total = references[r].Total();
    if (reference_total == 0) {
      result.diagnostics.push_back("reference " + std::to_string(r) +
                                   " has no grams; skipped");
      result.per_reference.push_back(std::nullopt);
      continue;
    }
    const RougeScore score = RougeScore::FromCounts(
        ClippedOverlap(candidate, references[r]), candidate_total, reference_total);
    result.per_reference.push_back(score);
    result.mean.precision += score.precision;
    result.mean.recall += score.recall;
    result.mean.f_measure += score.f_measure;
    if (scored == 0 || score.f_measure > result.best.f_measure) result.best = score;
    ++scored;
  }
  if (scored > 0) {
    result.mean.precision /= scored;
    result.mean.recall /= scored;
    result.mean.f_measure /= scored;
  } else {
    result.diagnostics.push_back("no usable reference");
  }
  return result;
}

}  // namespace

int GramCounts::Total() const {
  return std::accumulate(counts.begin(), counts.end(), 0,
                         [](int sum, const auto &entry) { return sum + entry.second; });
}

NGramMultiset NGrams(const LemmaText &text, int n) {
  if (n < 1) throw Error("n-gram order must be at least 1");
  NGramMultiset grams;
  grams.n = n;
  const auto order = static_cast<std::size_t>(n);
  for (const auto &sentence : text) {
    for (std::size_t i = 0; i + order <= sentence.size(); ++i) {
      ++grams.counts[Gram(sentence.begin() + i, sentence.begin() + i + order)];
    }
  }
  return grams;
}

SkipBigramMultiset SkipBigrams(const LemmaText &text, std::optional<int> max_skip) {
  if (max_skip && *max_skip < 0) throw Error("max_skip must be non-negative");
  SkipBigramMultiset pairs;
  pairs.max_skip = max_skip;
  for (const auto &sentence : text) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      std::size_t end = sentence.size();
      if (max_skip) end = std::min(end, i + 2 + static_cast<std::size_t>(*max_skip));
      for (std::size_t j = i + 1; j < end; ++j) {
        ++pairs.counts[Gram{sentence[i], sentence[j]}];
      }
    }
  }
  return pairs;
}

int ClippedOverlap(const GramCounts &a, const GramCounts &b) {
  int overlap = 0;
  for (const auto &[gram, count] : a.counts) {
    auto it = b.counts.find(gram);
    if (it != b.counts.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

RougeScore RougeScore::FromCounts(int overlap, int candidate_total, int reference_total) {
  RougeScore score;
  if (candidate_total > 0) score.precision = static_cast<double>(overlap) / candidate_total;
  if (reference_total > 0) score.recall = static_cast<double>(overlap) / reference_total;
  const double sum = score.precision + score.recall;
  score.f_measure = sum > 0 ? 2.0 * score.precision * score.recall / sum : 0.0;
  return score;
}

RougeResult RougeN(const LemmaText &candidate, const std::vector<LemmaText> &references,
                   int n) {
  std::vector<NGramMultiset> refs;
  for (const LemmaText &r : references) refs.push_back(NGrams(r, n));
  return Score(NGrams(candidate, n), refs);
}

RougeResult RougeS(const LemmaText &candidate, const std::vector<LemmaText> &references,
                   std::optional<int> max_skip) {
  std::vector<SkipBigramMultiset> refs;
  for (const LemmaText &r : references) refs.push_back(SkipBigrams(r, max_skip));
  return Score(SkipBigrams(candidate, max_skip), refs);
}

LemmaText ToLemmaText(std::string_view text, const Normalizer &normalizer) {
  LemmaText out;
  for (const std::string &sentence : SegmentSentences(text)) {
    std::vector<std::string> lemmas;
    for (const std::string &token : Tokenize(sentence).tokens) {
      lemmas.push_back(normalizer.Normalize(token));
    }
    if (!lemmas.empty()) out.push_back(std::move(lemmas));
  }
  return out;
}

}  // namespace mtsum
