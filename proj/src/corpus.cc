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

#include "mtsum/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mtsum/error.h"
#include "mtsum/text.h"

namespace mtsum {

namespace fs = std::filesystem;

Document BuildDocument(std::string doc_id, std::string_view text,
                       const Normalizer &normalizer, const VerbTagger &tagger) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  for (std::string &raw : SegmentSentences(text)) {
    Sentence sentence;
    sentence.index = static_cast<int>(doc.sentences.size());
    TokenizedText tokenized = Tokenize(raw);
    sentence.tokens = std::move(tokenized.tokens);
    sentence.break_after = std::move(tokenized.break_after);
    sentence.lemmas.reserve(sentence.tokens.size());
    for (const std::string &token : sentence.tokens) {
      sentence.lemmas.push_back(normalizer.Normalize(token));
      if (tagger.IsVerb(token, sentence.lemmas.back())) ++sentence.verb_count;
    }
    sentence.is_question = EndsWithQuestionMark(raw);
    sentence.raw_text = std::move(raw);
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

std::string ReadTextFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("cannot read file: " + path.string());
  std::string text = buffer.str();
  ValidateUtf8(text, path.string());
  return text;
}

Cluster LoadCluster(const fs::path &directory, const Normalizer &normalizer,
                    const VerbTagger &tagger) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error("not a directory: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) throw Error("no documents in " + directory.string());
  std::sort(files.begin(), files.end(),
            [](const fs::path &a, const fs::path &b) {
              return a.filename().string() < b.filename().string();
            });

  std::vector<std::pair<std::string, std::string>> texts;
  for (const fs::path &file : files) {
    texts.emplace_back(file.stem().string(), ReadTextFile(file));
  }
  fs::path name = directory.filename();
  if (name.empty()) name = directory.parent_path().filename();
  return BuildCluster(name.string(), texts, normalizer, tagger);
}

Cluster BuildCluster(std::string cluster_id,
                     const std::vector<std::pair<std::string, std::string>> &texts,
                     const Normalizer &normalizer, const VerbTagger &tagger) {
  if (texts.empty()) throw Error("no documents");
  Cluster cluster;
  cluster.cluster_id = std::move(cluster_id);
  std::set<std::string> seen;
  for (const auto &[doc_id, text] : texts) {
    if (!seen.insert(doc_id).second) {
      throw Error("duplicate document id: " + doc_id);
    }
    cluster.documents.push_back(BuildDocument(doc_id, text, normalizer, tagger));
  }
  return cluster;
}

}  // namespace mtsum
