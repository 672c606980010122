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

#include "mtsum/config.h"

#include <charconv>
#include <fstream>

#include <fmt/format.h>

#include "mtsum/corpus.h"
#include "mtsum/error.h"
#include "mtsum/text.h"

namespace mtsum {
namespace {

std::string_view TrimAscii(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(fmt::format("invalid value for {}: '{}'", key, value));
  }
  return out;
}

}  // namespace

void ApplyConfigValue(std::string_view key, std::string_view value, Settings &settings) {
  if (key.starts_with("weights.f") && key.size() == 10) {
    const int feature = key[9] - '1';
    if (feature < 0 || feature >= static_cast<int>(kNumFeatures)) {
      throw Error(fmt::format("unknown config key: {}", key));
    }
    settings.extractor.feature_weights[static_cast<std::size_t>(feature)] =
        ParseNumber<double>(key, value);
  } else if (key == "stopwords") {
    settings.stopwords_path = std::filesystem::path(std::string(value));
  } else if (key == "top_k") {
    settings.extractor.top_k = ParseNumber<int>(key, value);
  } else if (key == "max_ngram") {
    settings.extractor.max_ngram = ParseNumber<int>(key, value);
  } else if (key == "normalizer") {
    settings.normalizer = std::string(value);
  } else if (key == "technique") {
    settings.summary.technique = ParseTechnique(value);
  } else if (key == "min_words") {
    settings.summary.min_words = ParseNumber<int>(key, value);
  } else if (key == "max_words") {
    settings.summary.max_words = ParseNumber<int>(key, value);
  } else if (key == "overlap_threshold") {
    settings.summary.overlap_threshold = ParseNumber<double>(key, value);
  } else if (key == "topic_score") {
    settings.summary.topic_score_mode = ParseTopicScoreMode(value);
  } else if (key == "rouge.max_skip") {
    if (value == "inf") {
      settings.max_skip.reset();
    } else {
      settings.max_skip = ParseNumber<int>(key, value);
    }
  } else {
    throw Error(fmt::format("unknown config key: {}", key));
  }
}

void ApplyConfigFile(const std::filesystem::path &path, Settings &settings) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file: " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = TrimAscii(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(fmt::format("{}:{}: expected key=value", path.string(), number));
    }
    const std::string_view key = TrimAscii(text.substr(0, eq));
    const std::string_view value = TrimAscii(text.substr(eq + 1));
    try {
      ApplyConfigValue(key, value, settings);
    } catch (const Error &e) {
      throw Error(fmt::format("{}:{}: {}", path.string(), number, e.what()));
    }
    if (key == "stopwords" && settings.stopwords_path.is_relative()) {
      settings.stopwords_path = path.parent_path() / settings.stopwords_path;
    }
  }
}

std::unordered_set<std::string> LoadStopwords(const std::filesystem::path &path,
                                              const Normalizer &normalizer) {
  const std::string text = ReadTextFile(path);
  std::unordered_set<std::string> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string_view word = TrimAscii(std::string_view(text).substr(start, end - start));
    if (!word.empty() && word.front() != '#') words.insert(normalizer.Normalize(word));
    start = end + 1;
  }
  return words;
}

}  // namespace mtsum
