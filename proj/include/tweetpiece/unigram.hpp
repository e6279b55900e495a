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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tweetpiece {

// Word-boundary meta symbol: whitespace becomes U+2581 before segmentation
// and is restored on decode, which makes encode/decode lossless.
inline constexpr char32_t kBoundaryChar = U'▁';
inline constexpr std::string_view kBoundaryUtf8 = "\xE2\x96\x81";

std::vector<std::string> default_special_tokens();

// A trained unigram language-model tokenizer: a piece -> log-probability
// table plus reserved special tokens. Immutable after construction and safe
// to share across threads.
class UnigramModel {
 public:
  // `pieces` maps piece text to natural-log probability. Specials occupy
  // ids 0..k-1 in declared order; remaining ids are assigned to pieces by
  // descending log-probability (ties broken bytewise) so the id layout is
  // reproducible from the table alone.
  UnigramModel(std::vector<std::pair<std::string, double>> pieces,
               std::vector<std::string> specials, bool char_fallback = true,
               std::string mode_tag = {});

  std::size_t vocab_size() const { return pieces_by_id_.size(); }
  std::size_t special_count() const { return specials_.size(); }
  bool char_fallback() const { return char_fallback_; }
  const std::string& mode_tag() const { return mode_tag_; }

  const std::string& piece(int id) const;
  double log_prob(int id) const;
  // -1 when the piece is not in the vocabulary.
  int piece_id(std::string_view piece) const;
  int special_id(std::string_view token) const;  // -1 when absent

  int unk_id() const { return unk_id_; }
  int bos_id() const { return bos_id_; }
  int eos_id() const { return eos_id_; }
  int mask_id() const { return mask_id_; }
  int pad_id() const { return pad_id_; }

  // Sum of exp(log-prob) over non-special pieces; 1 within 1e-9 for trained
  // models.
  double probability_mass() const;

  // Maximum-likelihood segmentation of normalized text over the piece
  // lattice (whitespace mapped to the boundary symbol first). Unknown
  // characters come back as single-character pieces when char_fallback is
  // on, otherwise as the unk token string. Ties break toward fewer pieces,
  // then leftmost-longest.
  std::vector<std::string> viterbi_segment(std::string_view text) const;

  // Segments `text` to ids. Special-token strings found verbatim map to
  // their reserved ids atomically before segmentation; fallback pieces that
  // are not in the vocabulary map to unk.
  std::vector<int> encode(std::string_view text) const;

  // Inverse of encode for in-vocabulary text. Throws std::out_of_range on
  // a bad id.
  std::string decode(std::span<const int> ids) const;

  // Canonical JSON serialization: version field, sorted piece keys,
  // explicit log-probabilities. Byte-identical for identical models.
  std::string to_json() const;
  static UnigramModel from_json(std::string_view json_text);
  void save(const std::string& path) const;
  static UnigramModel load(const std::string& path);

  // Lattice internals shared with the trainer.
  struct TransparentHash {
    using is_transparent = void;
    std::size_t operator()(std::u32string_view s) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (char32_t c : s) {
        h ^= static_cast<std::size_t>(c);
        h *= 1099511628211ull;
      }
      return h;
    }
    std::size_t operator()(const std::u32string& s) const noexcept {
      return (*this)(std::u32string_view(s));
    }
  };
  using PieceMap =
      std::unordered_map<std::u32string, int, TransparentHash, std::equal_to<>>;

  const PieceMap& piece_map() const { return piece_map_; }
  std::size_t max_piece_cps() const { return max_piece_cps_; }
  double min_log_prob() const { return min_log_prob_; }
  double fallback_log_prob() const { return min_log_prob_ - 10.0; }

  // Best-path segmentation of a span of code points, as (piece id, length)
  // edges; id -1 marks a fallback character absent from the vocabulary.
  struct Edge {
    int id;
    std::size_t cps;
  };
  std::vector<Edge> viterbi_edges(std::u32string_view span) const;

  // Splits text (already boundary-substituted) into literal special-token
  // matches and plain spans, leftmost-longest.
  struct Segment {
    int special_id;  // -1 for a plain span
    std::u32string_view span;
  };
  std::vector<Segment> split_specials(std::u32string_view text) const;

 private:
  std::vector<std::string> specials_;
  std::vector<std::string> pieces_by_id_;   // full table, specials first
  std::vector<double> log_probs_by_id_;     // specials hold 0.0
  PieceMap piece_map_;                      // non-special pieces only
  std::unordered_map<std::string, int> special_ids_;
  std::vector<std::u32string> specials_u32_;
  bool char_fallback_ = true;
  std::string mode_tag_;
  std::size_t max_piece_cps_ = 1;
  std::size_t max_special_cps_ = 1;
  double min_log_prob_ = 0.0;
  int unk_id_ = -1, bos_id_ = -1, eos_id_ = -1, mask_id_ = -1, pad_id_ = -1;
};

// Replaces spaces/whitespace with the boundary symbol.
std::u32string to_boundary_form(std::string_view text);
// Inverse mapping used by decode.
std::string from_boundary_form(std::u32string_view text);

}  // namespace tweetpiece
