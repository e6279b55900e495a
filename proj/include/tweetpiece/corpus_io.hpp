// Copyright 2026 The tweetpiece Authors
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

#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace tweetpiece {

// File/format problems: missing files, invalid UTF-8, malformed JSONL.
// The CLI maps these to exit status 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CorpusFormat { plain, jsonl };

CorpusFormat parse_corpus_format(const std::string& name);  // throws DataError

struct CorpusRecord {
  std::size_t line_number = 0;  // 1-based, strictly increasing
  std::string text;
  std::map<std::string, std::string> metadata;  // extra JSONL string fields
};

// Streaming reader: memory stays bounded by the longest line. Errors carry
// the offending line number.
class CorpusReader {
 public:
  CorpusReader(const std::string& path, CorpusFormat format,
               std::string text_field = "text");

  // Fills `record` with the next document; false at end of input.
  bool next(CorpusRecord& record);

 private:
  std::ifstream in_;
  std::string path_;
  CorpusFormat format_;
  std::string text_field_;
  std::size_t line_number_ = 0;
};

// Convenience loader for corpora that fit in memory.
std::vector<std::string> read_corpus_lines(const std::string& path,
                                           CorpusFormat format,
                                           const std::string& text_field = "text");

// word [whitespace count] per line; count defaults to 1.
std::map<std::string, long long> read_word_dictionary(const std::string& path);

// JSON object {emoji: alias}.
std::map<std::string, std::string> read_emoji_table(const std::string& path);

}  // namespace tweetpiece
