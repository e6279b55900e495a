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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tweetpiece {

enum class CaseMode { cased, uncased, deacc };

std::string_view to_string(CaseMode mode);
std::optional<CaseMode> parse_case_mode(std::string_view name);

// Configuration for the tweet normalization pipeline. All operations treat
// the config as immutable; a validated config can be shared freely across
// threads.
struct NormalizationConfig {
  CaseMode mode = CaseMode::uncased;
  int max_run = 3;
  std::string user_token = "@usuario";
  std::string hashtag_token = "hashtag";
  std::string emoji_token = "emoji";
  std::map<std::string, std::string> emoji_table;  // emoji sequence -> alias
  std::optional<std::map<std::string, long long>> hashtag_dictionary;
  bool preserve_enye = false;  // keep the tilde of n under deacc

  static NormalizationConfig defaults(CaseMode mode);

  // Throws std::invalid_argument when an invariant is violated:
  // max_run >= 1; tokens non-empty, whitespace-free, with no grapheme run
  // longer than max_run; emoji_table keys are single emoji graphemes.
  void validate() const;
};

struct NormalizedText {
  std::string text;
  CaseMode applied_mode;
};

// The four preprocessing rules, each exposed on its own.

// Truncates every run of more than `max_run` identical extended grapheme
// clusters down to `max_run`.
std::string limit_repetitions(std::string_view text, int max_run);

// Replaces @handles (word-boundary `@` + 1..15 of [A-Za-z0-9_]) with
// `user_token`. An `@` embedded mid-word (e-mail addresses) is untouched.
std::string replace_handles(std::string_view text, std::string_view user_token);

// Rewrites `#tag` as `hashtag_token + " " + tag text`, splitting the tag
// into words at camel-case/underscore boundaries or, failing that, by
// greedy longest-match against `dictionary`.
std::string replace_hashtags(
    std::string_view text, std::string_view hashtag_token,
    const std::optional<std::map<std::string, long long>>& dictionary);

// Wraps each emoji grapheme as `emoji_token + " " + alias + " " +
// emoji_token` (alias empty for emoji missing from the table).
std::string replace_emojis(std::string_view text, std::string_view emoji_token,
                           const std::map<std::string, std::string>& table);

// cased: identity; uncased: lowercase; deacc: lowercase + accent removal.
std::string fold_case_accents(std::string_view text, CaseMode mode,
                              bool preserve_enye = false);

// Full pipeline: handles, hashtags, repetition cap, emoji, repetition cap
// again (so alias text stays within the run bound), case folding, then
// whitespace collapsed to single spaces and trimmed. The pass repeats until
// the text is stable, so the result is idempotent even when capping or
// accent removal uncovers new matches for the earlier rules.
NormalizedText normalize(std::string_view text, const NormalizationConfig& config);

}  // namespace tweetpiece
