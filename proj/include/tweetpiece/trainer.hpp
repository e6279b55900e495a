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

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tweetpiece/unigram.hpp"

namespace tweetpiece {

struct TrainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TokenizerTrainConfig {
  int vocab_size = 30000;
  int seed_multiplier = 10;  // seed vocab = seed_multiplier * vocab_size
  int max_piece_length = 16;  // in code points
  int em_iterations_per_round = 2;
  double shrink_factor = 0.75;
  double required_chars_coverage = 0.9995;
  std::vector<std::string> special_tokens = default_special_tokens();
  bool char_fallback = true;
  std::string mode_tag;  // recorded in the model file, e.g. "uncased"

  void validate() const;
};

// Trains a unigram tokenizer on an already-normalized corpus: seed
// candidate substrings, EM rounds, likelihood-loss pruning down to exactly
// vocab_size ids (specials included). Deterministic for identical inputs.
UnigramModel train_unigram(std::span<const std::string> corpus,
                           const TokenizerTrainConfig& config);

// One EM iteration over the corpus. Returns the re-estimated model and the
// corpus log-likelihood computed under the *input* model. Throws TrainError
// on an empty corpus or, with char_fallback disabled, on characters the
// model cannot cover.
std::pair<UnigramModel, double> em_step(const UnigramModel& model,
                                        std::span<const std::string> corpus);

}  // namespace tweetpiece
