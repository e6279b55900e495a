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

#include "tweetpiece/finetune.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tweetpiece/rng.hpp"

using namespace tweetpiece;

TEST_CASE("triangular_lr anchors") {
  const FinetuneConfig config;
  CHECK(triangular_lr(0, 1000, config) == 0.0);
  CHECK(triangular_lr(100, 1000, config) == 5e-5);  // peak, exactly
  CHECK(triangular_lr(1000, 1000, config) == 0.0);
  CHECK(triangular_lr(550, 1000, config) == 2.5e-5);  // halfway down
  CHECK_THROWS_AS(triangular_lr(-1, 1000, config), std::out_of_range);
  CHECK_THROWS_AS(triangular_lr(1001, 1000, config), std::out_of_range);
}

TEST_CASE("pretrain_lr anchors") {
  const PretrainConfig config;
  CHECK(pretrain_lr(0, config) == 0.0);
  CHECK(pretrain_lr(36000, config) == 3.5e-4);
  CHECK(pretrain_lr(318000, config) == 1.75e-4);  // decay midpoint
  CHECK(pretrain_lr(600000, config) == 0.0);
  CHECK_THROWS_AS(pretrain_lr(600001, config), std::out_of_range);
}

TEST_CASE("schedules are continuous, non-negative, single-peaked") {
  const FinetuneConfig config;
  const long long total = 2000;
  double prev = triangular_lr(0, total, config);
  int peaks = 0;
  double max_rate = 0.0;
  for (long long s = 1; s <= total; ++s) {
    const double rate = triangular_lr(s, total, config);
    CHECK(rate >= 0.0);
    // Piecewise linear with bounded slope: no jumps.
    CHECK(std::abs(rate - prev) <= config.peak_lr / 100.0 + 1e-18);
    max_rate = std::max(max_rate, rate);
    prev = rate;
  }
  for (long long s = 0; s <= total; ++s) {
    if (triangular_lr(s, total, config) == max_rate) ++peaks;
  }
  CHECK(peaks == 1);
  CHECK(max_rate == config.peak_lr);
}

TEST_CASE("pretrain config defaults and validation") {
  const PretrainConfig config;
  CHECK(config.heads == 12);
  CHECK(config.layers == 12);
  CHECK(config.hidden_size == 768);
  CHECK(config.intermediate_size == 3072);
  CHECK(config.vocab_size == 30000);
  CHECK(config.mlm_probability == 0.15);
  CHECK(config.max_seq_length == 128);
  CHECK(config.batch_size == 4096);
  CHECK(config.peak_lr == 3.5e-4);
  CHECK(config.weight_decay == 0.1);
  CHECK(config.adam_beta1 == 0.9);
  CHECK(config.adam_beta2 == 0.98);
  CHECK(config.adam_epsilon == 1e-6);
  CHECK(config.warmup_steps == 36000);
  CHECK(config.total_steps == 600000);
  // 6% warmup.
  CHECK(static_cast<double>(config.warmup_steps) /
            static_cast<double>(config.total_steps) ==
        doctest::Approx(0.06).epsilon(1e-12));
  CHECK_NOTHROW(config.validate());

  PretrainConfig bad = config;
  bad.warmup_steps = bad.total_steps;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("align_labels first-sub-word rule") {
  const FinetuneConfig config;
  const std::vector<std::pair<std::string, int>> words = {{"El", 1}, {"niño", 2}};
  const std::vector<int> labels = {7, 9};
  CHECK(align_labels(words, labels, config) ==
        std::vector<int>{7, 9, config.ignore_label});

  const std::vector<std::pair<std::string, int>> singles = {
      {"a", 1}, {"b", 1}, {"c", 1}};
  const std::vector<int> tags = {1, 2, 3};
  CHECK(align_labels(singles, tags, config) == tags);

  CHECK_THROWS_AS(align_labels(words, tags, config), std::invalid_argument);
  const std::vector<std::pair<std::string, int>> zero = {{"x", 0}};
  const std::vector<int> one = {1};
  CHECK_THROWS_AS(align_labels(zero, one, config), std::invalid_argument);
}

TEST_CASE("align_labels property: counts and offsets") {
  const FinetuneConfig config;
  Rng rng(314);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n_words = 1 + rng.next_below(12);
    std::vector<std::pair<std::string, int>> words;
    std::vector<int> labels;
    std::vector<std::size_t> expected_offsets;
    std::size_t offset = 0;
    for (std::size_t w = 0; w < n_words; ++w) {
      const int subwords = 1 + static_cast<int>(rng.next_below(4));
      words.emplace_back("w" + std::to_string(w), subwords);
      labels.push_back(static_cast<int>(rng.next_below(20)));
      expected_offsets.push_back(offset);
      offset += static_cast<std::size_t>(subwords);
    }
    const std::vector<int> aligned = align_labels(words, labels, config);
    REQUIRE(aligned.size() == offset);
    std::vector<std::size_t> got_offsets;
    for (std::size_t i = 0; i < aligned.size(); ++i) {
      if (aligned[i] != config.ignore_label) got_offsets.push_back(i);
    }
    // Labels could legitimately equal ignore_label only if generated so;
    // our labels are in [0, 20), so every word is visible.
    CHECK(got_offsets == expected_offsets);
    for (std::size_t w = 0; w < n_words; ++w) {
      CHECK(aligned[expected_offsets[w]] == labels[w]);
    }
  }
}
