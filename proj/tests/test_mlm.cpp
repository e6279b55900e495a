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

#include "tweetpiece/mlm.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tweetpiece/rng.hpp"

using namespace tweetpiece;

namespace {

MaskingConfig test_config(std::uint64_t seed = 1) {
  MaskingConfig config;
  config.seed = seed;
  config.vocab_size = 1000;
  config.special_id_count = 8;
  config.bos_id = 2;
  config.eos_id = 3;
  config.mask_id = 4;
  return config;
}

std::vector<int> content_ids(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> ids;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(8 + static_cast<int>(rng.next_below(992)));
  }
  return ids;
}

}  // namespace

TEST_CASE("frame_and_truncate") {
  const auto config = test_config();

  const auto long_ids = content_ids(200, 5);
  const auto framed = frame_and_truncate(long_ids, config);
  CHECK(framed.size() == 128);
  CHECK(framed.front() == config.bos_id);
  CHECK(framed.back() == config.eos_id);
  for (std::size_t i = 0; i < 126; ++i) CHECK(framed[i + 1] == long_ids[i]);

  CHECK(frame_and_truncate(std::vector<int>{}, config) ==
        std::vector<int>{config.bos_id, config.eos_id});

  const auto short_ids = content_ids(10, 6);
  CHECK(frame_and_truncate(short_ids, config).size() == 12);

  CHECK_THROWS_AS(frame_and_truncate(std::vector<int>{config.bos_id}, config),
                  std::invalid_argument);
}

TEST_CASE("build_example determinism") {
  const auto config = test_config(77);
  const auto framed = frame_and_truncate(content_ids(60, 9), config);
  const MaskedExample a = build_example(framed, config, 123);
  const MaskedExample b = build_example(framed, config, 123);
  CHECK(a.input_ids == b.input_ids);
  CHECK(a.labels == b.labels);
  CHECK(a.mask_positions == b.mask_positions);

  const MaskedExample c = build_example(framed, config, 124);
  CHECK(a.input_ids != c.input_ids);
}

TEST_CASE("build_example structural invariants") {
  auto config = test_config(3);
  config.mask_probability = 0.4;
  for (std::uint64_t index = 0; index < 200; ++index) {
    const auto framed = frame_and_truncate(content_ids(40, index), config);
    const MaskedExample example = build_example(framed, config, index);
    REQUIRE(example.input_ids.size() == framed.size());
    REQUIRE(example.labels.size() == framed.size());

    // labels[i] != ignore exactly at mask positions, sorted, never at the
    // frame or at special tokens.
    std::size_t pos_idx = 0;
    for (std::size_t i = 0; i < framed.size(); ++i) {
      const bool in_positions =
          pos_idx < example.mask_positions.size() &&
          example.mask_positions[pos_idx] == static_cast<int>(i);
      CHECK((example.labels[i] != config.ignore_label) == in_positions);
      if (in_positions) {
        CHECK(i > 0);
        CHECK(i + 1 < framed.size());
        CHECK(framed[i] >= config.special_id_count);
        CHECK(example.labels[i] == framed[i]);
        ++pos_idx;
      } else {
        CHECK(example.input_ids[i] == framed[i]);
      }
    }
    CHECK(pos_idx == example.mask_positions.size());

    // Restoring labels at mask positions reconstructs the original.
    std::vector<int> restored = example.input_ids;
    for (int p : example.mask_positions) {
      restored[static_cast<std::size_t>(p)] =
          example.labels[static_cast<std::size_t>(p)];
    }
    CHECK(restored == framed);
  }
}

TEST_CASE("specials are never masked") {
  auto config = test_config(8);
  config.mask_probability = 0.999999999;  // select everything selectable
  std::vector<int> ids = {2, 100, 5, 101, 6, 102, 3};  // bos, x, specials, eos
  const MaskedExample example = build_example(ids, config, 0);
  CHECK(example.input_ids[2] == 5);
  CHECK(example.input_ids[4] == 6);
  CHECK(example.labels[0] == config.ignore_label);
  CHECK(example.labels[2] == config.ignore_label);
  CHECK(example.labels[4] == config.ignore_label);
  CHECK(example.labels[6] == config.ignore_label);
  // Only the three content positions can be selected.
  for (int p : example.mask_positions) {
    CHECK((p == 1 || p == 3 || p == 5));
  }
}

TEST_CASE("forced mask branch") {
  auto config = test_config(21);
  config.mask_probability = 0.999999999;
  config.mask_split = {1.0, 0.0, 0.0};
  const std::vector<int> ids = {2, 42, 3};
  const MaskedExample example = build_example(ids, config, 0);
  REQUIRE(example.mask_positions == std::vector<int>{1});
  CHECK(example.input_ids == std::vector<int>{2, config.mask_id, 3});
  CHECK(example.labels ==
        std::vector<int>{config.ignore_label, 42, config.ignore_label});
}

TEST_CASE("no maskable positions is not an error") {
  const auto config = test_config(4);
  const std::vector<int> ids = {2, 3};
  const MaskedExample example = build_example(ids, config, 0);
  CHECK(example.mask_positions.empty());
  CHECK(example.input_ids == ids);
}

TEST_CASE("masking rate and branch split are statistically sound") {
  auto config = test_config(20260809);
  const auto framed = frame_and_truncate(content_ids(126, 1), config);
  const std::size_t maskable_per_example = framed.size() - 2;

  std::size_t n_maskable = 0, n_selected = 0;
  std::size_t n_mask = 0, n_keep = 0, n_random = 0;
  for (std::uint64_t index = 0; index < 2000; ++index) {
    const MaskedExample example = build_example(framed, config, index);
    n_maskable += maskable_per_example;
    n_selected += example.mask_positions.size();
    for (int p : example.mask_positions) {
      const auto i = static_cast<std::size_t>(p);
      if (example.input_ids[i] == config.mask_id) {
        ++n_mask;
      } else if (example.input_ids[i] == example.labels[i]) {
        ++n_keep;
      } else {
        ++n_random;
      }
    }
  }
  const double n = static_cast<double>(n_maskable);
  const double rate = static_cast<double>(n_selected) / n;
  const double sigma = std::sqrt(0.15 * 0.85 / n);
  CHECK(std::abs(rate - 0.15) < 5 * sigma);

  const double sel = static_cast<double>(n_selected);
  CHECK(std::abs(n_mask / sel - 0.8) < 5 * std::sqrt(0.8 * 0.2 / sel));
  CHECK(std::abs(n_random / sel - 0.1) < 5 * std::sqrt(0.1 * 0.9 / sel) + 1e-3);
  CHECK(std::abs(n_keep / sel - 0.1) < 5 * std::sqrt(0.1 * 0.9 / sel) + 1e-3);
}

TEST_CASE("config validation") {
  auto config = test_config();
  CHECK_NOTHROW(config.validate());

  auto bad = config;
  bad.mask_probability = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = config;
  bad.mask_split = {0.5, 0.1, 0.1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = config;
  bad.max_seq_length = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad = config;
  bad.vocab_size = 8;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
