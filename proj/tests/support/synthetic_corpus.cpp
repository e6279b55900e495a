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

#include "support/synthetic_corpus.hpp"

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <filesystem>

#include "tweetpiece/rng.hpp"

namespace tweetpiece::testsupport {

namespace {

constexpr std::size_t kLexiconSize = 30000;

const char* kOnsets[] = {"b",  "c",  "d",  "f",  "g",  "j",  "l",  "m",
                         "n",  "p",  "r",  "s",  "t",  "v",  "z",  "ch",
                         "ll", "br", "tr", "pl", "gr", "st", "qu", "h"};
const char* kNuclei[] = {"a",  "e",  "i",  "o",  "u",  "á",  "é",  "í",
                         "ó",  "ú",  "ia", "io", "ue", "ei", "an", "en",
                         "in", "on", "ar", "er", "or", "as", "es", "os"};

std::string lexicon_word(std::size_t rank) {
  Rng rng(0x5EEDF00Dull + rank);
  const int syllables = 2 + static_cast<int>(rng.next_below(3));
  std::string word;
  for (int s = 0; s < syllables; ++s) {
    word += kOnsets[rng.next_below(std::size(kOnsets))];
    word += kNuclei[rng.next_below(std::size(kNuclei))];
  }
  return word;
}

std::size_t zipf_rank(Rng& rng) {
  const double u = rng.next_double();
  const double r = std::exp(u * std::log(static_cast<double>(kLexiconSize)));
  const auto rank = static_cast<std::size_t>(r) - 1;
  return rank < kLexiconSize ? rank : kLexiconSize - 1;
}

std::string capitalize(std::string word) {
  if (!word.empty() && word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 0x20);
  }
  return word;
}

const char* kEmoji[] = {
    "\U0001F602", "\U0001F62D", "\U0001F60D", "\U0001F525", "❤️",
    "\U0001F44D", "\U0001F64F", "\U0001F389", "\U0001F923", "\U0001F614",
    "\U0001F1EA\U0001F1F8", "\U0001F937‍♀️",
};

const char* kPunct[] = {"!", "!!", "!!!!", "?", "??", "...", "....", ",", "jsjs"};

std::string synthetic_tweet(Rng& rng) {
  const int n_tokens = 4 + static_cast<int>(rng.next_below(12));
  std::string tweet;
  for (int t = 0; t < n_tokens; ++t) {
    if (t > 0) {
      tweet += ' ';
      if (rng.next_below(100) < 3) tweet += ' ';  // occasional double space
    }
    const std::uint64_t kind = rng.next_below(100);
    if (kind < 68) {
      std::string word = lexicon_word(zipf_rank(rng));
      if (rng.next_below(100) < 10) word = capitalize(std::move(word));
      if (rng.next_below(100) < 8) {
        // Elongation: repeat the final byte (always ASCII-safe nuclei end
        // in a plain letter often enough; guard for multi-byte tails).
        const char last = word.back();
        if (static_cast<unsigned char>(last) < 0x80) {
          const int extra = 2 + static_cast<int>(rng.next_below(6));
          word.append(static_cast<std::size_t>(extra), last);
        }
      }
      tweet += word;
    } else if (kind < 74) {
      tweet += "@user";
      tweet += std::to_string(rng.next_below(10000));
    } else if (kind < 79) {
      tweet += '#';
      const int parts = 1 + static_cast<int>(rng.next_below(2));
      for (int p = 0; p < parts; ++p) {
        tweet += capitalize(lexicon_word(zipf_rank(rng)));
      }
    } else if (kind < 85) {
      const char* emoji = kEmoji[rng.next_below(std::size(kEmoji))];
      const int reps = 1 + static_cast<int>(rng.next_below(5));
      for (int r = 0; r < reps; ++r) tweet += emoji;
    } else if (kind < 90) {
      tweet += kPunct[rng.next_below(std::size(kPunct))];
    } else if (kind < 94) {
      const int reps = 2 + static_cast<int>(rng.next_below(6));
      for (int r = 0; r < reps; ++r) tweet += (rng.next_below(2) ? "ja" : "je");
    } else if (kind < 97) {
      tweet += std::to_string(rng.next_below(1000));
    } else if (kind < 99) {
      tweet += lexicon_word(zipf_rank(rng) % 500);
      tweet += "@mail.com";
    } else {
      tweet += "¿";
      tweet += lexicon_word(zipf_rank(rng));
      tweet += "?";
    }
  }
  return tweet;
}

}  // namespace

std::vector<std::string> synthetic_tweets(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(synthetic_tweet(rng));
  return out;
}

std::string make_temp_dir(const std::string& hint) {
  static std::atomic<unsigned> counter{0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("tweetpiece_" + hint + "_" +
                    std::to_string(counter.fetch_add(1)) + "_" +
                    std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir.string();
}

}  // namespace tweetpiece::testsupport
