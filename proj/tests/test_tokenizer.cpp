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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "support/synthetic_corpus.hpp"
#include "tweetpiece/normalizer.hpp"
#include "tweetpiece/rng.hpp"
#include "tweetpiece/trainer.hpp"
#include "tweetpiece/unicode.hpp"
#include "tweetpiece/unigram.hpp"

using namespace tweetpiece;

namespace {

UnigramModel make_model(std::vector<std::pair<std::string, double>> probs,
                        std::vector<std::string> specials = {},
                        bool char_fallback = true) {
  std::vector<std::pair<std::string, double>> log_probs;
  for (auto& [piece, p] : probs) log_probs.emplace_back(piece, std::log(p));
  return UnigramModel(std::move(log_probs), std::move(specials), char_fallback);
}

// Exhaustive best-segmentation score, accumulating left to right exactly
// like the lattice does. Independent of the Viterbi implementation.
double best_score_brute_force(const UnigramModel& model,
                              const std::u32string& text, std::size_t pos,
                              double acc) {
  if (pos == text.size()) return acc;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t len = 1; pos + len <= text.size(); ++len) {
    const std::string piece = uni::to_utf8(
        std::u32string_view(text).substr(pos, len));
    const int id = model.piece_id(piece);
    double lp;
    if (id >= static_cast<int>(model.special_count()) &&
        id < static_cast<int>(model.vocab_size())) {
      lp = model.log_prob(id);
    } else if (len == 1 && id < 0) {
      lp = model.fallback_log_prob();
    } else {
      continue;
    }
    best = std::max(best, best_score_brute_force(model, text, pos + len, acc + lp));
  }
  return best;
}

double segmentation_score(const UnigramModel& model,
                          const std::vector<std::string>& pieces) {
  double score = 0.0;
  for (const auto& piece : pieces) {
    const int id = model.piece_id(piece);
    score += id >= 0 ? model.log_prob(id) : model.fallback_log_prob();
  }
  return score;
}

}  // namespace

TEST_CASE("boundary form round trip") {
  CHECK(from_boundary_form(to_boundary_form("hola mundo")) == "hola mundo");
  CHECK(to_boundary_form("a b") == U"a▁b");
  CHECK(from_boundary_form(U"▁x") == " x");
}

TEST_CASE("model construction and id layout") {
  const auto model = make_model({{"ab", 0.4}, {"a", 0.35}, {"b", 0.25}},
                                default_special_tokens());
  CHECK(model.vocab_size() == 11);
  CHECK(model.special_count() == 8);
  CHECK(model.piece(0) == "<pad>");
  CHECK(model.piece(4) == "<mask>");
  CHECK(model.piece(5) == "@usuario");
  // Non-special ids ordered by descending probability.
  CHECK(model.piece(8) == "ab");
  CHECK(model.piece(9) == "a");
  CHECK(model.piece(10) == "b");
  CHECK(model.piece_id("ab") == 8);
  CHECK(model.piece_id("zz") == -1);
  CHECK(model.probability_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)model.piece(11), std::out_of_range);

  CHECK_THROWS_AS(make_model({{"a", 0.5}, {"a", 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(make_model({{"@usuario", 1.0}}, default_special_tokens()),
                  std::invalid_argument);
}

TEST_CASE("viterbi_segment picks the max-probability split") {
  const auto model = make_model({{"ab", 0.4}, {"a", 0.3}, {"b", 0.3}});
  CHECK(model.viterbi_segment("ab") == std::vector<std::string>{"ab"});
  CHECK(model.viterbi_segment("a") == std::vector<std::string>{"a"});
  CHECK(model.viterbi_segment("aba") == std::vector<std::string>{"ab", "a"});
  CHECK(model.viterbi_segment("").empty());
}

TEST_CASE("viterbi tie-breaks: fewest pieces, then leftmost-longest") {
  // Exact integer log-probs force exact score ties.
  UnigramModel model({{"a", -1.0}, {"aa", -2.0}}, {});
  CHECK(model.viterbi_segment("aa") == std::vector<std::string>{"aa"});
  CHECK(model.viterbi_segment("aaa") == std::vector<std::string>{"aa", "a"});
  CHECK(model.viterbi_segment("aaaa") == std::vector<std::string>{"aa", "aa"});
}

TEST_CASE("viterbi equals exhaustive enumeration on random cases") {
  Rng rng(424242);
  const std::string alphabet = "abc";
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<std::string, double>> probs;
    std::set<std::string> seen;
    for (char c : alphabet) {
      probs.emplace_back(std::string(1, c), 0.05 + rng.next_double());
      seen.insert(probs.back().first);
    }
    const int extra = static_cast<int>(rng.next_below(17));
    for (int e = 0; e < extra; ++e) {
      const std::size_t len = 2 + rng.next_below(3);
      std::string piece;
      for (std::size_t k = 0; k < len; ++k) {
        piece += alphabet[rng.next_below(alphabet.size())];
      }
      if (seen.insert(piece).second) {
        probs.emplace_back(piece, 0.05 + rng.next_double());
      }
    }
    const auto model = make_model(std::move(probs));

    std::string text;
    const std::size_t text_len = rng.next_below(11);
    for (std::size_t k = 0; k < text_len; ++k) {
      text += alphabet[rng.next_below(alphabet.size())];
    }

    const auto segmentation = model.viterbi_segment(text);
    const double got = segmentation_score(model, segmentation);
    const double want = best_score_brute_force(model, uni::to_u32(text), 0, 0.0);
    CAPTURE(text);
    REQUIRE(got == want);
  }
}

TEST_CASE("encode maps specials atomically") {
  const auto model = make_model(
      {{"hola", 0.3}, {"h", 0.1}, {"o", 0.1}, {"l", 0.1}, {"a", 0.1},
       {"▁", 0.3}},
      default_special_tokens());
  const auto ids = model.encode("@usuario");
  REQUIRE(ids.size() == 1);
  CHECK(ids[0] == 5);
  CHECK(model.decode(ids) == "@usuario");

  CHECK(model.encode("").empty());

  const auto mixed = model.encode("hola @usuario");
  CHECK(model.decode(mixed) == "hola @usuario");
  // The special is one atomic id.
  CHECK(std::count(mixed.begin(), mixed.end(), 5) == 1);
}

TEST_CASE("encode/decode round trip and errors") {
  const auto model = make_model(
      {{"ho", 0.2}, {"la", 0.2}, {"h", 0.1}, {"o", 0.1}, {"l", 0.1},
       {"a", 0.1}, {"▁", 0.2}},
      default_special_tokens());
  for (const char* text : {"hola", "hola la", "alo hola", "", "a", "ho la la"}) {
    CHECK(model.decode(model.encode(text)) == text);
  }
  CHECK_THROWS_AS(model.decode(std::vector<int>{999}), std::out_of_range);

  // Out-of-vocabulary characters come back as unk on encode, and as
  // single-char fallback pieces from viterbi_segment.
  const auto ids = model.encode("hola x");
  CHECK(std::count(ids.begin(), ids.end(), model.unk_id()) == 1);
  const auto pieces = model.viterbi_segment("x");
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0] == "x");
}

TEST_CASE("round trip holds for random strings over the model alphabet") {
  const auto model = make_model(
      {{"ab", 0.2}, {"bc", 0.2}, {"a", 0.1}, {"b", 0.1}, {"c", 0.1},
       {"ñ", 0.1}, {"▁", 0.2}},
      default_special_tokens());
  Rng rng(7);
  const std::vector<std::string> pool = {"a", "b", "c", "ñ", " "};
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const std::size_t n = rng.next_below(20);
    for (std::size_t k = 0; k < n; ++k) text += pool[rng.next_below(pool.size())];
    // Normalized text never has leading/trailing/double spaces.
    while (!text.empty() && text.front() == ' ') text.erase(text.begin());
    while (!text.empty() && text.back() == ' ') text.pop_back();
    std::string squeezed;
    for (char ch : text) {
      if (ch == ' ' && !squeezed.empty() && squeezed.back() == ' ') continue;
      squeezed += ch;
    }
    CHECK(model.decode(model.encode(squeezed)) == squeezed);
  }
}

TEST_CASE("serialization is canonical and lossless") {
  const auto model = make_model({{"ab", 0.4}, {"a", 0.35}, {"b", 0.25}},
                                default_special_tokens());
  const std::string json = model.to_json();
  const UnigramModel reloaded = UnigramModel::from_json(json);
  CHECK(reloaded.to_json() == json);
  CHECK(reloaded.vocab_size() == model.vocab_size());
  CHECK(reloaded.piece(8) == "ab");
  CHECK(reloaded.log_prob(8) == model.log_prob(8));
  CHECK_THROWS(UnigramModel::from_json("{\"version\": 99}"));
}

TEST_CASE("em_step fixed point on the single-segmentation corpus") {
  const auto model = make_model({{"a", 0.5}, {"b", 0.5}});
  const std::vector<std::string> corpus = {"ab"};
  const auto [next, ll] = em_step(model, corpus);
  CHECK(ll == doctest::Approx(std::log(0.25)).epsilon(1e-12));
  CHECK(std::exp(next.log_prob(next.piece_id("a"))) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::exp(next.log_prob(next.piece_id("b"))) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(next.probability_mass() == doctest::Approx(1.0).epsilon(1e-9));
}

namespace {

// Independent E-step oracle: enumerate every segmentation, weight each by
// its product of probabilities, and accumulate posterior piece counts.
struct EnumeratedEStep {
  const UnigramModel& model;
  std::map<std::string, double> counts;
  double log_likelihood = 0.0;

  void segmentations(const std::u32string& text, std::size_t pos,
                     double weight, std::map<std::string, int>& used,
                     double& z, std::map<std::string, double>& sentence_counts,
                     bool accumulate) {
    if (pos == text.size()) {
      z += weight;
      if (accumulate) {
        for (const auto& [piece, n] : used) {
          sentence_counts[piece] += weight * n;
        }
      }
      return;
    }
    for (std::size_t len = 1; pos + len <= text.size(); ++len) {
      const std::string piece =
          uni::to_utf8(std::u32string_view(text).substr(pos, len));
      const int id = model.piece_id(piece);
      if (id < static_cast<int>(model.special_count())) continue;
      ++used[piece];
      segmentations(text, pos + len, weight * std::exp(model.log_prob(id)),
                    used, z, sentence_counts, accumulate);
      if (--used[piece] == 0) used.erase(piece);
    }
  }

  void add_sentence(const std::string& sentence) {
    const std::u32string text = uni::to_u32(sentence);
    double z = 0.0;
    std::map<std::string, double> sentence_counts;
    std::map<std::string, int> used;
    segmentations(text, 0, 1.0, used, z, sentence_counts, true);
    REQUIRE(z > 0.0);
    log_likelihood += std::log(z);
    for (const auto& [piece, c] : sentence_counts) counts[piece] += c / z;
  }
};

}  // namespace

TEST_CASE("em_step matches the enumeration oracle") {
  const auto model = make_model(
      {{"a", 0.2}, {"b", 0.15}, {"ab", 0.3}, {"ba", 0.1}, {"aba", 0.25}});
  const std::vector<std::string> corpus = {"aba", "ab", "abab", "ba", "aab"};

  EnumeratedEStep oracle{model, {}, 0.0};
  for (const auto& sentence : corpus) oracle.add_sentence(sentence);
  double total = 0.0;
  for (const auto& [piece, c] : oracle.counts) total += c;

  const auto [next, ll] = em_step(model, corpus);
  CHECK(ll == doctest::Approx(oracle.log_likelihood).epsilon(1e-12));
  for (const auto& [piece, c] : oracle.counts) {
    const int id = next.piece_id(piece);
    REQUIRE(id >= 0);
    CHECK(std::exp(next.log_prob(id)) ==
          doctest::Approx(c / total).epsilon(1e-10));
  }
}

TEST_CASE("em_step keeps cross-word pieces via sentence-level lattices") {
  // A piece with an interior boundary symbol can span two words, so the
  // per-word shortcut must be bypassed.
  const auto model = make_model({{"a", 0.2}, {"b", 0.2}, {"▁", 0.2},
                                 {"a▁b", 0.4}});
  const std::vector<std::string> corpus = {"a b"};
  const auto [next, ll] = em_step(model, corpus);
  // Two segmentations: [a][▁][b] with 0.008 and [a▁b] with 0.4.
  CHECK(ll == doctest::Approx(std::log(0.408)).epsilon(1e-12));
  const double p_cross = std::exp(next.log_prob(next.piece_id("a▁b")));
  // Posterior of the one-piece path: 0.4/0.408; it contributes one of the
  // expected (0.4 + 3*0.008)/0.408... tokens.
  const double post = 0.4 / 0.408;
  const double expected_tokens = post * 1 + (1 - post) * 3;
  CHECK(p_cross == doctest::Approx(post / expected_tokens).epsilon(1e-10));
}

TEST_CASE("em_step errors") {
  const auto model = make_model({{"a", 1.0}});
  CHECK_THROWS_AS(em_step(model, std::vector<std::string>{}), TrainError);
  CHECK_THROWS_AS(em_step(model, std::vector<std::string>{""}), TrainError);

  // Fallback disabled: uncoverable characters are an error.
  const auto strict = make_model({{"a", 1.0}}, {}, /*char_fallback=*/false);
  CHECK_THROWS_AS(em_step(strict, std::vector<std::string>{"ax"}), TrainError);
}

TEST_CASE("em monotonicity on random corpora") {
  Rng rng(99);
  for (int corpus_trial = 0; corpus_trial < 5; ++corpus_trial) {
    std::vector<std::string> corpus;
    for (int s = 0; s < 20; ++s) {
      std::string line;
      const std::size_t n = 1 + rng.next_below(8);
      for (std::size_t k = 0; k < n; ++k) line += "abc"[rng.next_below(3)];
      corpus.push_back(line);
    }
    std::vector<std::pair<std::string, double>> probs = {
        {"a", rng.next_double() + 0.1},
        {"b", rng.next_double() + 0.1},
        {"c", rng.next_double() + 0.1},
        {"ab", rng.next_double() + 0.1},
        {"bc", rng.next_double() + 0.1},
        {"abc", rng.next_double() + 0.1},
    };
    double total = 0.0;
    for (auto& [p, v] : probs) total += v;
    for (auto& [p, v] : probs) v /= total;
    UnigramModel model = make_model(std::move(probs));

    double prev_ll = -std::numeric_limits<double>::infinity();
    for (int step = 0; step < 10; ++step) {
      auto [next, ll] = em_step(model, corpus);
      CHECK(ll >= prev_ll - 1e-9);
      prev_ll = ll;
      model = std::move(next);
    }
  }
}

TEST_CASE("train on the degenerate abab corpus") {
  const std::vector<std::string> corpus(1000, "abab");
  TokenizerTrainConfig config;
  config.vocab_size = 12;
  const UnigramModel model = train_unigram(corpus, config);
  CHECK(model.vocab_size() == 12);
  CHECK(model.special_count() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(model.piece(i) == default_special_tokens()[static_cast<std::size_t>(i)]);
  }
  // Highest non-special probability goes to "ab" (id 8 by construction).
  CHECK(model.piece(8) == "ab");
  CHECK(model.probability_mass() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(model.decode(model.encode("abab")) == "abab");
}

TEST_CASE("train errors") {
  TokenizerTrainConfig config;
  config.vocab_size = 12;
  CHECK_THROWS_AS(train_unigram(std::vector<std::string>{}, config), TrainError);

  // vocab_size not above specials + required characters.
  TokenizerTrainConfig tiny;
  tiny.vocab_size = 10;  // 8 specials + chars {a, b} leaves no room
  CHECK_THROWS_AS(train_unigram(std::vector<std::string>(10, "abab"), tiny),
                  TrainError);

  // Corpus without enough candidates to fill the vocabulary.
  TokenizerTrainConfig wide;
  wide.vocab_size = 40;
  CHECK_THROWS_AS(train_unigram(std::vector<std::string>(100, "ab"), wide),
                  TrainError);
}

TEST_CASE("train is deterministic and hits vocab_size exactly") {
  auto raw = testsupport::synthetic_tweets(400, 11);
  const auto config_norm = NormalizationConfig::defaults(CaseMode::uncased);
  std::vector<std::string> corpus;
  for (const auto& line : raw) corpus.push_back(normalize(line, config_norm).text);

  TokenizerTrainConfig config;
  config.vocab_size = 300;
  config.mode_tag = "uncased";
  const UnigramModel first = train_unigram(corpus, config);
  const UnigramModel second = train_unigram(corpus, config);
  CHECK(first.to_json() == second.to_json());
  CHECK(first.vocab_size() == 300);
  CHECK(first.probability_mass() == doctest::Approx(1.0).epsilon(1e-9));

  // Round trip over in-vocabulary text.
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK(first.decode(first.encode(corpus[i])) == corpus[i]);
  }

  // The worker count must not leak into the result.
  setenv("TWEETPIECE_THREADS", "1", 1);
  const std::string serial = train_unigram(corpus, config).to_json();
  setenv("TWEETPIECE_THREADS", "3", 1);
  const std::string parallel = train_unigram(corpus, config).to_json();
  unsetenv("TWEETPIECE_THREADS");
  CHECK(serial == first.to_json());
  CHECK(parallel == first.to_json());
}
