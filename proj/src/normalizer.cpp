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

#include "tweetpiece/normalizer.hpp"

#include <stdexcept>
#include <vector>

#include "tweetpiece/emoji_data.hpp"
#include "tweetpiece/unicode.hpp"

namespace tweetpiece {

namespace {

constexpr std::size_t kMaxHandleLength = 15;  // Twitter username limit

bool is_ascii_handle_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

// Longest grapheme run in a token, used by config validation.
int longest_grapheme_run(std::string_view text) {
  int best = 0;
  int run = 0;
  std::string_view prev;
  for (std::string_view g : uni::graphemes(text)) {
    run = (g == prev) ? run + 1 : 1;
    prev = g;
    best = std::max(best, run);
  }
  return best;
}

bool contains_whitespace(std::string_view text) {
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = uni::decode_one(text, pos, cp);
    if (n == 0) return true;  // treat garbage as unacceptable too
    if (uni::is_whitespace(cp)) return true;
    pos += n;
  }
  return false;
}

void validate_token(std::string_view token, int max_run, const char* what) {
  if (token.empty()) {
    throw std::invalid_argument(std::string(what) + " must not be empty");
  }
  if (contains_whitespace(token)) {
    throw std::invalid_argument(std::string(what) + " must not contain whitespace");
  }
  if (longest_grapheme_run(token) > max_run) {
    throw std::invalid_argument(std::string(what) +
                                " contains a grapheme run longer than max_run");
  }
}

// Splits a hashtag body at camel-case, letter/digit and underscore
// boundaries. Returns the parts in input order; underscores are dropped.
std::vector<std::string> camel_split(std::u32string_view tag) {
  std::vector<std::string> parts;
  std::string current;
  enum class Kind { none, lower, upper, digit };
  Kind prev = Kind::none;
  for (std::size_t i = 0; i < tag.size(); ++i) {
    const char32_t cp = tag[i];
    if (cp == '_') {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
      prev = Kind::none;
      continue;
    }
    Kind kind = Kind::lower;
    if (uni::is_digit(cp)) {
      kind = Kind::digit;
    } else if (uni::is_upper(cp)) {
      kind = Kind::upper;
    }
    bool boundary = false;
    if (!current.empty()) {
      if (kind == Kind::upper && (prev == Kind::lower || prev == Kind::digit)) {
        boundary = true;  // buenViernes -> buen | Viernes
      } else if (kind == Kind::digit && prev != Kind::digit && prev != Kind::none) {
        boundary = true;  // top10 -> top | 10
      } else if (kind != Kind::digit && prev == Kind::digit) {
        boundary = true;  // 10cosas -> 10 | cosas
      } else if (kind == Kind::lower && prev == Kind::upper) {
        // An uppercase run followed by lowercase: the last upper starts the
        // next word (USAToday -> USA | Today).
        std::size_t j = i;  // position of the lowercase char
        if (j >= 2 && uni::is_upper(tag[j - 1]) && uni::is_upper(tag[j - 2])) {
          std::string head = current;
          // Move the final uppercase letter into the new part.
          std::u32string cur32 = uni::to_u32(current);
          cur32.pop_back();
          head = uni::to_utf8(cur32);
          if (!head.empty()) parts.push_back(std::move(head));
          std::string tail;
          uni::append_utf8(tail, tag[j - 1]);
          current = tail;
        }
      }
    }
    if (boundary) {
      parts.push_back(std::move(current));
      current.clear();
    }
    uni::append_utf8(current, cp);
    prev = kind;
  }
  if (!current.empty()) parts.push_back(std::move(current));
  return parts;
}

// Greedy longest-match segmentation against the dictionary; comparison is
// case-insensitive but the emitted slices keep the tag's original form.
bool dictionary_split(std::string_view tag,
                      const std::map<std::string, long long>& dictionary,
                      std::vector<std::string>& parts) {
  const std::u32string tag32 = uni::to_u32(tag);
  std::u32string lowered;
  lowered.reserve(tag32.size());
  for (char32_t cp : tag32) lowered.push_back(uni::to_lower(cp));

  std::size_t max_word = 0;
  for (const auto& [word, freq] : dictionary) {
    (void)freq;
    max_word = std::max(max_word, uni::to_u32(word).size());
  }

  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < lowered.size()) {
    std::size_t best = 0;
    const std::size_t limit = std::min(max_word, lowered.size() - pos);
    for (std::size_t len = limit; len >= 1; --len) {
      const std::string candidate =
          uni::to_utf8(std::u32string_view(lowered).substr(pos, len));
      if (dictionary.count(candidate)) {
        best = len;
        break;
      }
    }
    if (best == 0) return false;
    out.push_back(uni::to_utf8(std::u32string_view(tag32).substr(pos, best)));
    pos += best;
  }
  parts = std::move(out);
  return true;
}

std::string segment_hashtag(
    std::string_view tag,
    const std::optional<std::map<std::string, long long>>& dictionary) {
  const std::u32string tag32 = uni::to_u32(tag);
  std::vector<std::string> parts = camel_split(tag32);
  if (parts.size() < 2) {
    std::vector<std::string> dict_parts;
    if (dictionary && dictionary_split(tag, *dictionary, dict_parts)) {
      parts = std::move(dict_parts);
    } else {
      parts = {std::string(tag)};
    }
  }
  std::string joined;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) joined += ' ';
    joined += parts[i];
  }
  return joined;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = uni::decode_one(text, pos, cp);
    if (n == 0) throw std::invalid_argument("invalid UTF-8 input");
    if (uni::is_whitespace(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      uni::append_utf8(out, cp);
    }
    pos += n;
  }
  return out;
}

}  // namespace

std::string_view to_string(CaseMode mode) {
  switch (mode) {
    case CaseMode::cased: return "cased";
    case CaseMode::uncased: return "uncased";
    case CaseMode::deacc: return "deacc";
  }
  return "uncased";
}

std::optional<CaseMode> parse_case_mode(std::string_view name) {
  if (name == "cased") return CaseMode::cased;
  if (name == "uncased") return CaseMode::uncased;
  if (name == "deacc") return CaseMode::deacc;
  return std::nullopt;
}

NormalizationConfig NormalizationConfig::defaults(CaseMode mode) {
  NormalizationConfig config;
  config.mode = mode;
  config.emoji_table = bundled_emoji_aliases();
  return config;
}

void NormalizationConfig::validate() const {
  if (max_run < 1) throw std::invalid_argument("max_run must be >= 1");
  validate_token(user_token, max_run, "user_token");
  validate_token(hashtag_token, max_run, "hashtag_token");
  validate_token(emoji_token, max_run, "emoji_token");
  // The folded forms must obey the run bound too, or the tokens would not
  // survive the pipeline intact.
  validate_token(fold_case_accents(user_token, mode, preserve_enye), max_run,
                 "user_token (folded)");
  validate_token(fold_case_accents(hashtag_token, mode, preserve_enye), max_run,
                 "hashtag_token (folded)");
  validate_token(fold_case_accents(emoji_token, mode, preserve_enye), max_run,
                 "emoji_token (folded)");
  for (const auto& [key, alias] : emoji_table) {
    (void)alias;
    if (uni::graphemes(key).size() != 1 || !uni::is_emoji_grapheme(key)) {
      throw std::invalid_argument("emoji_table key is not a single emoji grapheme: " + key);
    }
  }
}

std::string limit_repetitions(std::string_view text, int max_run) {
  if (max_run < 1) throw std::invalid_argument("max_run must be >= 1");
  std::string out;
  out.reserve(text.size());
  std::string_view prev;
  int run = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = uni::next_grapheme(text, pos);
    const std::string_view g = text.substr(pos, end - pos);
    run = (g == prev) ? run + 1 : 1;
    prev = g;
    if (run <= max_run) out += g;
    pos = end;
  }
  return out;
}

std::string replace_handles(std::string_view text, std::string_view user_token) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  char32_t prev_cp = 0;
  bool has_prev = false;
  while (pos < text.size()) {
    char32_t cp;
    const std::size_t n = uni::decode_one(text, pos, cp);
    if (n == 0) throw std::invalid_argument("invalid UTF-8 input");
    if (cp == '@' && (!has_prev || !uni::is_word_char(prev_cp))) {
      std::size_t run_end = pos + 1;
      while (run_end < text.size() && is_ascii_handle_char(text[run_end])) {
        ++run_end;
      }
      const std::size_t run_len = run_end - pos - 1;
      if (run_len >= 1 && run_len <= kMaxHandleLength) {
        out += user_token;
        pos = run_end;
        prev_cp = 'a';  // the token ends in a word character
        has_prev = true;
        continue;
      }
    }
    uni::append_utf8(out, cp);
    prev_cp = cp;
    has_prev = true;
    pos += n;
  }
  return out;
}

std::string replace_hashtags(
    std::string_view text, std::string_view hashtag_token,
    const std::optional<std::map<std::string, long long>>& dictionary) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  char32_t prev_cp = 0;
  bool has_prev = false;
  while (pos < text.size()) {
    char32_t cp;
    const std::size_t n = uni::decode_one(text, pos, cp);
    if (n == 0) throw std::invalid_argument("invalid UTF-8 input");
    if (cp == '#' && (!has_prev || !uni::is_word_char(prev_cp))) {
      std::size_t tag_end = pos + 1;
      while (tag_end < text.size()) {
        char32_t tag_cp;
        const std::size_t m = uni::decode_one(text, tag_end, tag_cp);
        if (m == 0 || !uni::is_word_char(tag_cp)) break;
        tag_end += m;
      }
      if (tag_end > pos + 1) {
        const std::string_view tag = text.substr(pos + 1, tag_end - pos - 1);
        out += hashtag_token;
        out += ' ';
        out += segment_hashtag(tag, dictionary);
        pos = tag_end;
        prev_cp = 'a';
        has_prev = true;
        continue;
      }
    }
    uni::append_utf8(out, cp);
    prev_cp = cp;
    has_prev = true;
    pos += n;
  }
  return out;
}

std::string replace_emojis(std::string_view text, std::string_view emoji_token,
                           const std::map<std::string, std::string>& table) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;  // a separator owed before the next output
  auto ends_in_space = [&out] {
    if (out.empty()) return true;
    const char c = out.back();
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = uni::next_grapheme(text, pos);
    const std::string_view g = text.substr(pos, end - pos);
    if (uni::is_emoji_grapheme(g)) {
      auto it = table.find(std::string(g));
      if (it == table.end()) {
        // Retry without a trailing VS16.
        std::string stripped(g);
        if (stripped.size() >= 3 &&
            stripped.compare(stripped.size() - 3, 3, "\xEF\xB8\x8F") == 0) {
          stripped.resize(stripped.size() - 3);
          it = table.find(stripped);
        }
      }
      if (!ends_in_space()) out += ' ';
      out += emoji_token;
      if (it != table.end() && !it->second.empty()) {
        out += ' ';
        out += it->second;
      }
      out += ' ';
      out += emoji_token;
      pending_space = true;
    } else {
      char32_t first;
      uni::decode_one(g, 0, first);
      if (pending_space && !uni::is_whitespace(first)) out += ' ';
      pending_space = false;
      out += g;
    }
    pos = end;
  }
  return out;
}

std::string fold_case_accents(std::string_view text, CaseMode mode,
                              bool preserve_enye) {
  if (mode == CaseMode::cased) return std::string(text);
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = uni::decode_one(text, pos, cp);
    if (n == 0) throw std::invalid_argument("invalid UTF-8 input");
    pos += n;
    char32_t lowered = uni::to_lower(cp);
    if (mode == CaseMode::uncased) {
      uni::append_utf8(out, lowered);
      continue;
    }
    // deacc
    if (uni::is_combining_mark(lowered)) {
      if (preserve_enye && lowered == 0x0303 && !out.empty() && out.back() == 'n') {
        out.pop_back();
        uni::append_utf8(out, U'ñ');
      }
      continue;  // drop the mark
    }
    if (preserve_enye && lowered == U'ñ') {
      uni::append_utf8(out, lowered);
      continue;
    }
    uni::append_utf8(out, uni::strip_accent(lowered));
  }
  return out;
}

namespace {

std::string normalize_pass(std::string_view text, const NormalizationConfig& config) {
  std::string s = replace_handles(text, config.user_token);
  s = replace_hashtags(s, config.hashtag_token, config.hashtag_dictionary);
  // Cap repetitions while emoji are still graphemes (so a run of four
  // identical emoji shrinks to three before being spelled out), then again
  // afterwards so alias text from custom tables also obeys the bound.
  s = limit_repetitions(s, config.max_run);
  s = replace_emojis(s, config.emoji_token, config.emoji_table);
  s = limit_repetitions(s, config.max_run);
  s = fold_case_accents(s, config.mode, config.preserve_enye);
  s = collapse_whitespace(s);
  return s;
}

}  // namespace

NormalizedText normalize(std::string_view text, const NormalizationConfig& config) {
  config.validate();
  // One pass is almost always enough, but a pass can surface new work for
  // the earlier rules: capping an over-long @-run can leave a valid handle,
  // and deacc folding can merge graphemes into fresh runs or drop combining
  // marks that were splitting a handle or hashtag. Iterating to a fixed
  // point keeps normalize idempotent with every rule's guarantee intact.
  std::string current(text);
  for (int pass = 0; pass < 6; ++pass) {
    std::string next = normalize_pass(current, config);
    const bool stable = next == current;
    current = std::move(next);
    if (stable) break;
  }
  return NormalizedText{std::move(current), config.mode};
}

}  // namespace tweetpiece
