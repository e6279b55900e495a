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

#include <cmath>
#include <stdexcept>

#include "tweetpiece/rng.hpp"

namespace tweetpiece {

MaskingConfig MaskingConfig::for_model(const UnigramModel& model,
                                       std::uint64_t seed) {
  MaskingConfig config;
  config.seed = seed;
  config.vocab_size = static_cast<int>(model.vocab_size());
  config.special_id_count = static_cast<int>(model.special_count());
  config.bos_id = model.bos_id();
  config.eos_id = model.eos_id();
  config.mask_id = model.mask_id();
  return config;
}

void MaskingConfig::validate() const {
  if (!(mask_probability > 0.0 && mask_probability < 1.0)) {
    throw std::invalid_argument("mask_probability must be in (0, 1)");
  }
  if (max_seq_length < 2) {
    throw std::invalid_argument("max_seq_length must be >= 2");
  }
  const double split_sum = mask_split[0] + mask_split[1] + mask_split[2];
  if (std::abs(split_sum - 1.0) > 1e-9) {
    throw std::invalid_argument("mask_split must sum to 1");
  }
  for (double s : mask_split) {
    if (s < 0.0) throw std::invalid_argument("mask_split entries must be >= 0");
  }
  if (bos_id < 0 || eos_id < 0 || mask_id < 0) {
    throw std::invalid_argument("bos/eos/mask ids must be set");
  }
  if (vocab_size <= special_id_count) {
    throw std::invalid_argument("vocab_size must exceed special_id_count");
  }
}

std::vector<int> frame_and_truncate(std::span<const int> ids,
                                    const MaskingConfig& config) {
  config.validate();
  for (int id : ids) {
    if (id == config.bos_id || id == config.eos_id) {
      throw std::invalid_argument("ids must not already contain bos/eos");
    }
  }
  const std::size_t content_max =
      static_cast<std::size_t>(config.max_seq_length) - 2;
  const std::size_t n = std::min(ids.size(), content_max);
  std::vector<int> out;
  out.reserve(n + 2);
  out.push_back(config.bos_id);
  out.insert(out.end(), ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n));
  out.push_back(config.eos_id);
  return out;
}

MaskedExample build_example(std::span<const int> framed_ids,
                            const MaskingConfig& config,
                            std::uint64_t example_index) {
  config.validate();
  if (framed_ids.size() < 2 || framed_ids.front() != config.bos_id ||
      framed_ids.back() != config.eos_id) {
    throw std::invalid_argument("input must be bos/eos framed");
  }

  Rng rng = Rng::for_stream(config.seed, example_index);
  MaskedExample example;
  example.input_ids.assign(framed_ids.begin(), framed_ids.end());
  example.labels.assign(framed_ids.size(), config.ignore_label);

  const int n_random = config.vocab_size - config.special_id_count;
  for (std::size_t i = 1; i + 1 < framed_ids.size(); ++i) {
    const int original = framed_ids[i];
    if (original < config.special_id_count) continue;  // specials stay intact
    if (rng.next_double() >= config.mask_probability) continue;

    const double branch = rng.next_double();
    if (branch < config.mask_split[0]) {
      example.input_ids[i] = config.mask_id;
    } else if (branch < config.mask_split[0] + config.mask_split[1]) {
      example.input_ids[i] =
          config.special_id_count +
          static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_random)));
    }  // else: keep the original token
    example.labels[i] = original;
    example.mask_positions.push_back(static_cast<int>(i));
  }
  return example;
}

}  // namespace tweetpiece
