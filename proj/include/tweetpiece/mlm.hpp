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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tweetpiece/unigram.hpp"

namespace tweetpiece {

struct MaskingConfig {
  double mask_probability = 0.15;
  int max_seq_length = 128;
  // mask-token / random-token / keep-original corruption split.
  std::array<double, 3> mask_split = {0.8, 0.1, 0.1};
  std::uint64_t seed = 0;
  int ignore_label = -100;

  // Vocabulary geometry, normally taken from the tokenizer.
  int vocab_size = 0;
  int special_id_count = 0;  // ids below this are special and never masked
  int bos_id = -1;
  int eos_id = -1;
  int mask_id = -1;

  static MaskingConfig for_model(const UnigramModel& model, std::uint64_t seed);

  void validate() const;  // throws std::invalid_argument
};

// One dynamically masked MLM training instance.
struct MaskedExample {
  std::vector<int> input_ids;
  std::vector<int> labels;          // original id where corrupted, else ignore
  std::vector<int> mask_positions;  // sorted
};

// [bos] + ids truncated to max_seq_length-2 + [eos]. `ids` must not already
// contain bos/eos.
std::vector<int> frame_and_truncate(std::span<const int> ids,
                                    const MaskingConfig& config);

// Selects each maskable position (not bos/eos/specials) independently with
// mask_probability and corrupts it per mask_split. The randomness stream is
// derived from (config.seed, example_index) only.
MaskedExample build_example(std::span<const int> framed_ids,
                            const MaskingConfig& config,
                            std::uint64_t example_index);

}  // namespace tweetpiece
