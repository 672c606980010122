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

#ifndef MTSUM_CORPUS_H_
#define MTSUM_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mtsum/normalizer.h"

namespace mtsum {

struct Sentence {
  int index = 0;  // 0-based position within the document
  std::string raw_text;
  std::vector<std::string> tokens;
  std::vector<std::string> lemmas;  // parallel to tokens
  std::vector<bool> break_after;    // parallel to tokens
  bool is_question = false;
  int verb_count = 0;

  std::size_t word_count() const { return tokens.size(); }
  bool operator==(const Sentence &) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;

  // Ld: document length in sentences.
  std::size_t length_sentences() const { return sentences.size(); }
  bool operator==(const Document &) const = default;
};

// Documents are immutable once built and may be processed concurrently.
struct Cluster {
  std::string cluster_id;
  std::vector<Document> documents;

  bool operator==(const Cluster &) const = default;
};

// Segments, tokenizes and normalizes one document's text.
Document BuildDocument(std::string doc_id, std::string_view text,
                       const Normalizer &normalizer,
                       const VerbTagger &tagger = NullVerbTagger());

// Loads every regular *.txt file in `directory`, in filename order, as one
// document whose id is the file stem. Throws Error on an empty directory
// ("no documents"), an unreadable file, or invalid UTF-8 (naming the file).
Cluster LoadCluster(const std::filesystem::path &directory,
                    const Normalizer &normalizer,
                    const VerbTagger &tagger = NullVerbTagger());

// Builds a cluster from in-memory (doc_id, text) pairs, keeping their order.
// Throws Error on an empty list or duplicate ids.
Cluster BuildCluster(std::string cluster_id,
                     const std::vector<std::pair<std::string, std::string>> &texts,
                     const Normalizer &normalizer,
                     const VerbTagger &tagger = NullVerbTagger());

std::string ReadTextFile(const std::filesystem::path &path);

}  // namespace mtsum

#endif  // MTSUM_CORPUS_H_
