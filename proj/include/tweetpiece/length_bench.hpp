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
#include <string>
#include <vector>

#include "tweetpiece/normalizer.hpp"
#include "tweetpiece/unigram.hpp"

namespace tweetpiece {

// Tokens-per-instance statistics for one (corpus, tokenizer) pair. The
// count excludes bos/eos framing; the interval is the 95% normal
// approximation.
struct LengthStats {
  std::string corpus_name;
  std::string tokenizer_name;
  std::size_t n = 0;
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation
  double ci_low = 0.0;
  double ci_high = 0.0;
};

LengthStats token_length_stats(std::span<const std::string> corpus,
                               const UnigramModel& model,
                               const NormalizationConfig& normalizer_config,
                               std::string corpus_name = {},
                               std::string tokenizer_name = {});

// One LengthStats per model over the same corpus, in input order.
std::vector<LengthStats> compare_tokenizers(
    std::span<const std::string> corpus,
    std::span<const UnigramModel* const> models,
    std::span<const NormalizationConfig> configs,
    std::string corpus_name = {},
    std::span<const std::string> tokenizer_names = {});

}  // namespace tweetpiece
