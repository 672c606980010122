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

#ifndef MTSUM_CONFIG_H_
#define MTSUM_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>

#include "mtsum/keyphrase.h"
#include "mtsum/normalizer.h"
#include "mtsum/summarizer.h"

namespace mtsum {

// Everything a run can be configured with. Defaults apply when neither a
// config file nor a flag sets a value.
struct Settings {
  ExtractorConfig extractor;
  SummaryConfig summary;
  std::string normalizer = "casefold";
  std::filesystem::path stopwords_path;  // empty: no stopwords
  std::optional<int> max_skip;           // ROUGE-S gap bound
};

// Reads a key=value config file into `settings`. Blank lines and lines
// starting with '#' are ignored. Keys: weights.f1 .. weights.f8, stopwords,
// top_k, max_ngram, normalizer, technique, min_words, max_words,
// overlap_threshold, topic_score, rouge.max_skip. A relative stopwords path
// is resolved against the config file's directory. Throws Error on unknown
// keys or malformed values, naming the file and line.
void ApplyConfigFile(const std::filesystem::path &path, Settings &settings);

// Sets a single key as if read from a config file.
void ApplyConfigValue(std::string_view key, std::string_view value, Settings &settings);

// One stopword per line, passed through the normalizer so it matches lemmas.
std::unordered_set<std::string> LoadStopwords(const std::filesystem::path &path,
                                              const Normalizer &normalizer);

}  // namespace mtsum

#endif  // MTSUM_CONFIG_H_
