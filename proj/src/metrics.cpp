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

#include "tweetpiece/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace tweetpiece {

std::string MetricReport::to_json() const {
  nlohmann::json j;
  j["macro_f1"] = macro_f1;
  j["micro_f1"] = micro_f1;
  j["accuracy"] = accuracy;
  j["per_class_f1"] = per_class_f1;
  j["n"] = n;
  return j.dump();
}

MetricReport classification_metrics(std::span<const std::string> gold,
                                    std::span<const std::string> pred,
                                    std::span<const std::string> label_set) {
  if (gold.empty()) throw std::invalid_argument("empty input");
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("gold and pred sizes differ");
  }
  if (label_set.empty()) throw std::invalid_argument("empty label set");

  std::map<std::string, std::size_t> label_index;
  for (const auto& label : label_set) {
    label_index.emplace(label, label_index.size());
  }
  auto index_of = [&](const std::string& label) {
    auto it = label_index.find(label);
    if (it == label_index.end()) {
      throw std::invalid_argument("unknown label: " + label);
    }
    return it->second;
  };

  const std::size_t k = label_index.size();
  std::vector<double> tp(k, 0), fp(k, 0), fn(k, 0);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const std::size_t g = index_of(gold[i]);
    const std::size_t p = index_of(pred[i]);
    if (g == p) {
      ++correct;
      tp[g] += 1;
    } else {
      fn[g] += 1;
      fp[p] += 1;
    }
  }

  MetricReport report;
  report.n = gold.size();
  report.accuracy = static_cast<double>(correct) / static_cast<double>(gold.size());

  double f1_sum = 0.0;
  double tp_total = 0.0, fp_total = 0.0, fn_total = 0.0;
  for (const auto& [label, idx] : label_index) {
    const double precision_den = tp[idx] + fp[idx];
    const double recall_den = tp[idx] + fn[idx];
    const double precision = precision_den > 0 ? tp[idx] / precision_den : 0.0;
    const double recall = recall_den > 0 ? tp[idx] / recall_den : 0.0;
    const double f1 =
        precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
    report.per_class_f1[label] = f1;
    f1_sum += f1;
    tp_total += tp[idx];
    fp_total += fp[idx];
    fn_total += fn[idx];
  }
  report.macro_f1 = f1_sum / static_cast<double>(k);

  const double micro_p_den = tp_total + fp_total;
  const double micro_r_den = tp_total + fn_total;
  const double micro_p = micro_p_den > 0 ? tp_total / micro_p_den : 0.0;
  const double micro_r = micro_r_den > 0 ? tp_total / micro_r_den : 0.0;
  if (micro_p == micro_r) {
    // Harmonic mean of equal values is the value itself; taking it directly
    // keeps micro F1 bit-identical to accuracy in the single-label case.
    report.micro_f1 = micro_p;
  } else {
    report.micro_f1 =
        micro_p + micro_r > 0 ? 2 * micro_p * micro_r / (micro_p + micro_r) : 0.0;
  }
  return report;
}

double benchmark_score(std::span<const double> task_scores) {
  if (task_scores.empty()) throw std::invalid_argument("empty score list");
  // Work in integer tenths so the decimal mean rounds the way the printed
  // tables do.
  long long sum_tenths = 0;
  for (double s : task_scores) sum_tenths += std::llround(s * 10.0);
  const long long n = static_cast<long long>(task_scores.size());
  long long tenths;
  if (sum_tenths >= 0) {
    tenths = (2 * sum_tenths + n) / (2 * n);
  } else {
    tenths = -((2 * (-sum_tenths) + n) / (2 * n));
  }
  return static_cast<double>(tenths) / 10.0;
}

double perplexity(double loss) {
  if (loss < 0.0) throw std::invalid_argument("cross-entropy loss must be >= 0");
  return std::exp(loss);
}

std::pair<double, double> mean_of_runs(std::span<const double> run_scores) {
  if (run_scores.empty()) throw std::invalid_argument("empty score list");
  double sum = 0.0;
  for (double s : run_scores) sum += s;
  const double mean = sum / static_cast<double>(run_scores.size());
  if (run_scores.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double s : run_scores) ss += (s - mean) * (s - mean);
  const double std_dev = std::sqrt(ss / static_cast<double>(run_scores.size() - 1));
  return {mean, std_dev};
}

}  // namespace tweetpiece
