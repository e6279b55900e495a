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

// Internal segmentation-lattice routines shared by the model and the
// trainer. Piece ids are whatever the supplied map stores; `log_probs` is
// indexed by those ids.

#pragma once

#include <cmath>
#include <limits>
#include <string_view>
#include <vector>

#include "tweetpiece/unigram.hpp"

namespace tweetpiece::detail {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Lattice {
  const UnigramModel::PieceMap* pieces;
  const double* log_probs;
  std::size_t max_piece_cps;
  double fallback_log_prob;
  bool allow_fallback;
  int banned_full_span_id = -1;  // used by the pruner's alternative scoring
};

// Edge candidates ending at position j. Calls fn(i, id, log_prob) for each;
// id is -1 for a fallback character edge.
template <typename Fn>
inline void for_each_edge(const Lattice& lat, std::u32string_view span,
                          std::size_t j, Fn&& fn) {
  const std::size_t lo = j > lat.max_piece_cps ? j - lat.max_piece_cps : 0;
  for (std::size_t i = lo; i < j; ++i) {
    auto it = lat.pieces->find(span.substr(i, j - i));
    if (it != lat.pieces->end()) {
      if (i == 0 && j == span.size() && it->second == lat.banned_full_span_id) {
        continue;
      }
      const double lp = lat.log_probs[it->second];
      if (lp == kNegInf) {
        if (j - i == 1 && lat.allow_fallback) {
          fn(i, it->second, lat.fallback_log_prob);
        }
        continue;
      }
      fn(i, it->second, lp);
    } else if (j - i == 1 && lat.allow_fallback) {
      fn(i, -1, lat.fallback_log_prob);
    }
  }
}

// Maximum-probability segmentation. Ties prefer fewer pieces, then the
// split whose earlier pieces are longer. Returns an empty vector for an
// empty span; an uncoverable span (fallback disabled) yields edges with a
// -inf score, which callers detect via best_score.
struct ViterbiResult {
  std::vector<UnigramModel::Edge> edges;
  double score = 0.0;
};

inline ViterbiResult viterbi_best(const Lattice& lat, std::u32string_view span) {
  const std::size_t n = span.size();
  ViterbiResult result;
  if (n == 0) return result;

  struct Node {
    double score = kNegInf;
    std::size_t count = 0;
    std::size_t prev = 0;
    int id = -1;
    std::size_t len = 0;
  };
  std::vector<Node> nodes(n + 1);
  nodes[0].score = 0.0;

  for (std::size_t j = 1; j <= n; ++j) {
    Node& dst = nodes[j];
    for_each_edge(lat, span, j, [&](std::size_t i, int id, double lp) {
      if (nodes[i].score == kNegInf) return;
      const double score = nodes[i].score + lp;
      const std::size_t count = nodes[i].count + 1;
      const bool better =
          score > dst.score ||
          (score == dst.score &&
           (count < dst.count || (count == dst.count && i > dst.prev)));
      if (better) {
        dst.score = score;
        dst.count = count;
        dst.prev = i;
        dst.id = id;
        dst.len = j - i;
      }
    });
  }

  result.score = nodes[n].score;
  if (nodes[n].score == kNegInf) return result;
  std::size_t pos = n;
  while (pos > 0) {
    const Node& node = nodes[pos];
    result.edges.push_back(UnigramModel::Edge{node.id, node.len});
    pos = node.prev;
  }
  std::reverse(result.edges.begin(), result.edges.end());
  return result;
}

// Forward-backward over the span's lattice. Adds freq-weighted expected
// piece counts into `counts` (indexed by piece id; fallback edges are
// skipped) and returns the log-likelihood of a single occurrence, or -inf
// when the span is uncoverable.
inline double accumulate_expected(const Lattice& lat, std::u32string_view span,
                                  double freq, std::vector<double>& counts) {
  const std::size_t n = span.size();
  if (n == 0) return 0.0;

  auto log_add = [](double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = a > b ? a : b;
    const double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
  };

  std::vector<double> alpha(n + 1, kNegInf);
  std::vector<double> beta(n + 1, kNegInf);
  alpha[0] = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    for_each_edge(lat, span, j, [&](std::size_t i, int, double lp) {
      if (alpha[i] != kNegInf) alpha[j] = log_add(alpha[j], alpha[i] + lp);
    });
  }
  const double z = alpha[n];
  if (z == kNegInf) return kNegInf;

  beta[n] = 0.0;
  for (std::size_t j = n; j >= 1; --j) {
    for_each_edge(lat, span, j, [&](std::size_t i, int, double lp) {
      if (beta[j] != kNegInf) beta[i] = log_add(beta[i], lp + beta[j]);
    });
  }

  for (std::size_t j = 1; j <= n; ++j) {
    for_each_edge(lat, span, j, [&](std::size_t i, int id, double lp) {
      if (id < 0) return;
      if (alpha[i] == kNegInf || beta[j] == kNegInf) return;
      counts[static_cast<std::size_t>(id)] +=
          freq * std::exp(alpha[i] + lp + beta[j] - z);
    });
  }
  return z;
}

}  // namespace tweetpiece::detail
