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

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tweetpiece {

struct MetricReport {
  double macro_f1 = 0.0;
  double micro_f1 = 0.0;
  double accuracy = 0.0;
  std::map<std::string, double> per_class_f1;
  std::size_t n = 0;

  std::string to_json() const;
};

// Confusion-matrix metrics for single-label classification. Macro F1
// averages over the whole declared label_set (absent classes count as 0);
// micro F1 comes from pooled counts, so it equals accuracy here. Classes
// with precision+recall = 0 score F1 = 0. Throws std::invalid_argument on
// empty input, size mismatch, or a label outside label_set.
MetricReport classification_metrics(std::span<const std::string> gold,
                                    std::span<const std::string> pred,
                                    std::span<const std::string> label_set);

// GLUE-style aggregate: the arithmetic mean of per-task percents, reported
// at one decimal with round-half-away-from-zero. Inputs are treated as
// one-decimal percentages, so the rounding happens in decimal arithmetic
// (66.65 -> 66.7, which plain binary doubles would miss).
double benchmark_score(std::span<const double> task_scores);

// exp(loss) for a natural-log cross-entropy; throws on negative loss.
double perplexity(double loss);

// Mean and sample standard deviation (n-1 denominator; 0 when n == 1).
std::pair<double, double> mean_of_runs(std::span<const double> run_scores);

}  // namespace tweetpiece
