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

#include "tweetpiece/corpus_io.hpp"

#include <sstream>

#include <json.hpp>

#include "tweetpiece/unicode.hpp"

namespace tweetpiece {

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "plain") return CorpusFormat::plain;
  if (name == "jsonl") return CorpusFormat::jsonl;
  throw DataError("unknown corpus format: " + name);
}

CorpusReader::CorpusReader(const std::string& path, CorpusFormat format,
                           std::string text_field)
    : in_(path, std::ios::binary),
      path_(path),
      format_(format),
      text_field_(std::move(text_field)) {
  if (!in_) throw DataError("cannot open input file: " + path);
}

bool CorpusReader::next(CorpusRecord& record) {
  std::string line;
  if (!std::getline(in_, line)) return false;
  ++line_number_;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  record.line_number = line_number_;
  record.metadata.clear();

  if (format_ == CorpusFormat::plain) {
    if (!uni::is_valid_utf8(line)) {
      throw DataError(path_ + ": line " + std::to_string(line_number_) +
                      ": invalid UTF-8");
    }
    record.text = std::move(line);
    return true;
  }

  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw DataError(path_ + ": line " + std::to_string(line_number_) +
                    ": malformed JSON object");
  }
  if (!j.contains(text_field_) || !j[text_field_].is_string()) {
    throw DataError(path_ + ": line " + std::to_string(line_number_) +
                    ": missing string field '" + text_field_ + "'");
  }
  record.text = j[text_field_].get<std::string>();
  if (!uni::is_valid_utf8(record.text)) {
    throw DataError(path_ + ": line " + std::to_string(line_number_) +
                    ": invalid UTF-8");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != text_field_ && value.is_string()) {
      record.metadata.emplace(key, value.get<std::string>());
    }
  }
  return true;
}

std::vector<std::string> read_corpus_lines(const std::string& path,
                                           CorpusFormat format,
                                           const std::string& text_field) {
  CorpusReader reader(path, format, text_field);
  std::vector<std::string> out;
  CorpusRecord record;
  while (reader.next(record)) out.push_back(std::move(record.text));
  return out;
}

std::map<std::string, long long> read_word_dictionary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dictionary file: " + path);
  std::map<std::string, long long> dict;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!uni::is_valid_utf8(line)) {
      throw DataError(path + ": line " + std::to_string(line_number) +
                      ": invalid UTF-8");
    }
    std::istringstream ss(line);
    std::string word;
    long long count = 1;
    ss >> word;
    if (word.empty()) continue;
    ss >> count;
    dict[uni::to_lower(word)] += count;
  }
  return dict;
}

std::map<std::string, std::string> read_emoji_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open emoji table: " + path);
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw DataError(path + ": expected a JSON object of {emoji: alias}");
  }
  std::map<std::string, std::string> table;
  for (const auto& [emoji, alias] : j.items()) {
    if (!alias.is_string()) {
      throw DataError(path + ": alias for '" + emoji + "' is not a string");
    }
    table[emoji] = alias.get<std::string>();
  }
  return table;
}

}  // namespace tweetpiece
