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

#include <cmath>
#include <stdexcept>

namespace tweetpiece {

namespace {

// Shared triangular shape. Integer warmup boundary so the peak value is hit
// exactly at the boundary step.
double triangle(long long step, long long warmup, long long total, double peak) {
  if (step < 0 || step > total) {
    throw std::out_of_range("step outside [0, total_steps]");
  }
  if (step <= warmup) {
    if (warmup == 0) return step == 0 ? 0.0 : peak;
    return peak * (static_cast<double>(step) / static_cast<double>(warmup));
  }
  return peak * (static_cast<double>(total - step) /
                 static_cast<double>(total - warmup));
}

}  // namespace

void PretrainConfig::validate() const {
  if (warmup_steps < 0 || warmup_steps >= total_steps) {
    throw std::invalid_argument("warmup_steps must be in [0, total_steps)");
  }
  if (peak_lr <= 0.0 || adam_epsilon <= 0.0) {
    throw std::invalid_argument("rates must be positive");
  }
  if (!(mlm_probability > 0.0 && mlm_probability < 1.0)) {
    throw std::invalid_argument("mlm_probability must be in (0, 1)");
  }
}

void FinetuneConfig::validate() const {
  if (!(warmup_fraction > 0.0 && warmup_fraction < 1.0)) {
    throw std::invalid_argument("warmup_fraction must be in (0, 1)");
  }
  if (peak_lr <= 0.0) throw std::invalid_argument("peak_lr must be positive");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
}

double triangular_lr(long long step, long long total_steps,
                     const FinetuneConfig& config) {
  config.validate();
  if (total_steps <= 0) throw std::out_of_range("total_steps must be positive");
  const long long warmup =
      std::llround(config.warmup_fraction * static_cast<double>(total_steps));
  return triangle(step, warmup, total_steps, config.peak_lr);
}

double pretrain_lr(long long step, const PretrainConfig& config) {
  config.validate();
  return triangle(step, config.warmup_steps, config.total_steps, config.peak_lr);
}

std::vector<int> align_labels(
    std::span<const std::pair<std::string, int>> words,
    std::span<const int> labels, const FinetuneConfig& config) {
  if (words.size() != labels.size()) {
    throw std::invalid_argument("word and label counts differ");
  }
  std::size_t total = 0;
  for (const auto& [word, count] : words) {
    (void)word;
    if (count < 1) throw std::invalid_argument("sub-word count must be >= 1");
    total += static_cast<std::size_t>(count);
  }
  std::vector<int> out;
  out.reserve(total);
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back(labels[i]);
    for (int k = 1; k < words[i].second; ++k) out.push_back(config.ignore_label);
  }
  return out;
}

}  // namespace tweetpiece
