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
#include <utility>
#include <vector>

namespace tweetpiece {

// Pre-training hyperparameters. The sequence-classification head contract
// is: a linear classifier over the first-position (bos) representation;
// token classification predicts each word's tag from its first sub-word.
// Only the schedules and label alignment are executable here; running the
// transformer itself is out of scope.
struct PretrainConfig {
  int heads = 12;
  int layers = 12;
  int hidden_size = 768;
  int intermediate_size = 3072;
  std::string hidden_activation = "gelu";
  int vocab_size = 30000;
  double mlm_probability = 0.15;
  int max_seq_length = 128;
  int batch_size = 4096;
  double peak_lr = 3.5e-4;
  double weight_decay = 0.1;  // optimizer decay, not an LR decay rate
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.98;
  double adam_epsilon = 1e-6;
  long long warmup_steps = 36000;  // 6% of total
  long long total_steps = 600000;

  void validate() const;  // throws std::invalid_argument
};

struct FinetuneConfig {
  int epochs = 5;
  double peak_lr = 5e-5;
  double warmup_fraction = 0.10;
  int ignore_label = -100;

  void validate() const;
};

// Triangular schedule: linear 0 -> peak over the first
// warmup_fraction * total_steps optimizer steps, then linear peak -> 0.
// Throws std::out_of_range unless 0 <= step <= total_steps.
double triangular_lr(long long step, long long total_steps,
                     const FinetuneConfig& config);

// Same shape with the fixed warmup_steps from the pre-training table.
double pretrain_lr(long long step, const PretrainConfig& config);

// First-sub-word labeling: word i contributes its label on its first
// sub-word and ignore_label on the rest. `words` pairs each word with its
// sub-word count (>= 1); sizes of `words` and `labels` must match.
std::vector<int> align_labels(
    std::span<const std::pair<std::string, int>> words,
    std::span<const int> labels, const FinetuneConfig& config);

}  // namespace tweetpiece
