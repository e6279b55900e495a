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

#include "tweetpiece/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "lattice.hpp"
#include "tweetpiece/threading.hpp"
#include "tweetpiece/unicode.hpp"

namespace tweetpiece {

namespace {

constexpr double kNegInf = detail::kNegInf;
constexpr std::size_t kEStepChunk = 8192;

// A whitespace-delimited word (with its boundary-symbol prefix when not
// sentence-initial), deduplicated over the corpus. EM and candidate
// extraction run per unique unit, which is valid because no trained piece
// carries an interior boundary symbol.
struct Unit {
  std::u32string text;
  double freq = 0;                // total occurrences
  double full_sentence_freq = 0;  // occurrences where the unit was a whole sentence
  std::vector<std::u32string_view> spans;  // piece-eligible spans of `text`
};

std::vector<Unit> build_units(std::span<const std::string> corpus,
                              bool per_sentence) {
  std::unordered_map<std::u32string, std::size_t,
                     UnigramModel::TransparentHash, std::equal_to<>>
      index;
  std::vector<Unit> units;
  std::u32string current;
  for (const std::string& line : corpus) {
    const std::u32string sentence = to_boundary_form(line);
    if (sentence.empty()) continue;

    auto add = [&](std::u32string text, bool whole_sentence) {
      auto [it, inserted] = index.emplace(text, units.size());
      if (inserted) units.push_back(Unit{std::move(text), 0, 0, {}});
      Unit& u = units[it->second];
      u.freq += 1;
      if (whole_sentence) u.full_sentence_freq += 1;
    };

    if (per_sentence) {
      add(sentence, true);
      continue;
    }
    current.clear();
    std::vector<std::u32string> words;
    for (char32_t cp : sentence) {
      if (cp == kBoundaryChar && !current.empty()) {
        words.push_back(current);
        current.clear();
      }
      current.push_back(cp);
    }
    if (!current.empty()) words.push_back(current);
    for (auto& w : words) add(std::move(w), words.size() == 1);
  }
  return units;
}

// Splits `text` into the sub-spans that plain pieces may cover: literal
// special-token occurrences (leftmost-longest) and characters in `breakers`
// act as boundaries and are excluded.
std::vector<std::u32string_view> piece_spans(
    std::u32string_view text, const std::vector<std::u32string>& specials,
    const std::unordered_set<char32_t>& breakers) {
  std::vector<std::u32string_view> out;
  std::size_t start = 0;
  std::size_t pos = 0;
  auto flush = [&](std::size_t end) {
    if (start < end) out.push_back(text.substr(start, end - start));
  };
  while (pos < text.size()) {
    std::size_t special_len = 0;
    for (const auto& tok : specials) {
      if (tok.size() > special_len && pos + tok.size() <= text.size() &&
          text.compare(pos, tok.size(), tok) == 0) {
        special_len = tok.size();
      }
    }
    if (special_len > 0) {
      flush(pos);
      pos += special_len;
      start = pos;
    } else if (breakers.count(text[pos])) {
      flush(pos);
      ++pos;
      start = pos;
    } else {
      ++pos;
    }
  }
  flush(text.size());
  return out;
}

// Freq-weighted expected counts and corpus log-likelihood over all units.
// Throws when a span is uncoverable (possible only with fallback disabled).
double e_step(const std::vector<Unit>& units, const detail::Lattice& lat,
              std::vector<double>& counts) {
  const std::size_t chunks = chunk_count(units.size(), kEStepChunk);
  std::vector<std::vector<double>> chunk_counts(chunks);
  std::vector<double> chunk_ll(chunks, 0.0);
  std::vector<char> chunk_fail(chunks, 0);

  parallel_chunks(units.size(), kEStepChunk,
                  [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::vector<double>& local = chunk_counts[c];
    local.assign(counts.size(), 0.0);
    double ll = 0.0;
    for (std::size_t u = begin; u < end; ++u) {
      const Unit& unit = units[u];
      for (std::u32string_view span : unit.spans) {
        const double z = detail::accumulate_expected(lat, span, unit.freq, local);
        if (z == kNegInf) {
          chunk_fail[c] = 1;
          return;
        }
        ll += unit.freq * z;
      }
    }
    chunk_ll[c] = ll;
  });

  double ll = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    if (chunk_fail[c]) {
      throw TrainError("corpus contains characters the model cannot cover");
    }
    ll += chunk_ll[c];
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += chunk_counts[c][i];
  }
  return ll;
}

// Viterbi piece-usage counts (exact integers stored as doubles, so the
// accumulation order cannot matter).
std::vector<double> viterbi_counts(const std::vector<Unit>& units,
                                   const detail::Lattice& lat,
                                   std::size_t n_pieces) {
  const std::size_t chunks = chunk_count(units.size(), kEStepChunk);
  std::vector<std::vector<double>> chunk_counts(chunks);
  parallel_chunks(units.size(), kEStepChunk,
                  [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::vector<double>& local = chunk_counts[c];
    local.assign(n_pieces, 0.0);
    for (std::size_t u = begin; u < end; ++u) {
      const Unit& unit = units[u];
      for (std::u32string_view span : unit.spans) {
        for (const auto& edge : detail::viterbi_best(lat, span).edges) {
          if (edge.id >= 0) local[static_cast<std::size_t>(edge.id)] += unit.freq;
        }
      }
    }
  });
  std::vector<double> counts(n_pieces, 0.0);
  for (const auto& local : chunk_counts) {
    for (std::size_t i = 0; i < local.size(); ++i) counts[i] += local[i];
  }
  return counts;
}

double log_sum_exp(const std::vector<double>& values) {
  double hi = kNegInf;
  for (double v : values) hi = std::max(hi, v);
  if (hi == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double v : values) {
    if (v != kNegInf) sum += std::exp(v - hi);
  }
  return hi + std::log(sum);
}

}  // namespace

void TokenizerTrainConfig::validate() const {
  if (vocab_size < 2) throw TrainError("vocab_size must be at least 2");
  if (static_cast<std::size_t>(vocab_size) <= special_tokens.size()) {
    throw TrainError("vocab_size must exceed the number of special tokens");
  }
  if (seed_multiplier < 1) throw TrainError("seed_multiplier must be >= 1");
  if (max_piece_length < 2) throw TrainError("max_piece_length must be >= 2");
  if (em_iterations_per_round < 1) {
    throw TrainError("em_iterations_per_round must be >= 1");
  }
  if (!(shrink_factor > 0.0 && shrink_factor < 1.0)) {
    throw TrainError("shrink_factor must be in (0, 1)");
  }
  if (!(required_chars_coverage > 0.0 && required_chars_coverage <= 1.0)) {
    throw TrainError("required_chars_coverage must be in (0, 1]");
  }
}

UnigramModel train_unigram(std::span<const std::string> corpus,
                           const TokenizerTrainConfig& config) {
  config.validate();
  if (corpus.empty()) throw TrainError("empty corpus");

  std::vector<std::u32string> specials_u32;
  specials_u32.reserve(config.special_tokens.size());
  for (const auto& s : config.special_tokens) specials_u32.push_back(uni::to_u32(s));

  std::vector<Unit> units = build_units(corpus, /*per_sentence=*/false);
  if (units.empty()) throw TrainError("corpus contains no text");

  // Character inventory over special-free spans.
  for (Unit& u : units) u.spans = piece_spans(u.text, specials_u32, {});
  std::unordered_map<char32_t, double> char_freq;
  for (const Unit& u : units) {
    for (std::u32string_view span : u.spans) {
      for (char32_t cp : span) char_freq[cp] += u.freq;
    }
  }
  std::vector<std::pair<char32_t, double>> chars(char_freq.begin(), char_freq.end());
  std::sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::unordered_set<char32_t> dropped;
  if (!config.char_fallback && config.required_chars_coverage < 1.0) {
    double total = 0.0;
    for (const auto& [cp, f] : chars) total += f;
    double covered = 0.0;
    std::size_t keep = 0;
    while (keep < chars.size() && covered < config.required_chars_coverage * total) {
      covered += chars[keep].second;
      ++keep;
    }
    for (std::size_t i = keep; i < chars.size(); ++i) dropped.insert(chars[i].first);
    chars.resize(keep);
    for (Unit& u : units) u.spans = piece_spans(u.text, specials_u32, dropped);
  }

  const std::size_t target_pieces =
      static_cast<std::size_t>(config.vocab_size) - config.special_tokens.size();
  if (target_pieces <= chars.size()) {
    throw TrainError(
        "vocab_size is not larger than the required character inventory plus "
        "special tokens");
  }

  // Candidate substrings: frequency floor of 2, and at least one occurrence
  // that is a proper part of a sentence (a piece matching only entire
  // sentences would just memorize them).
  struct Cand {
    double freq = 0;
    double improper = 0;
  };
  std::unordered_map<std::u32string_view, Cand, UnigramModel::TransparentHash,
                     std::equal_to<>>
      cand_map;
  for (const Unit& u : units) {
    const bool whole_unit_is_sentence = u.full_sentence_freq > 0;
    for (std::u32string_view span : u.spans) {
      const bool span_is_whole_unit = span.size() == u.text.size();
      const std::size_t max_len =
          std::min<std::size_t>(config.max_piece_length, span.size());
      for (std::size_t len = 2; len <= max_len; ++len) {
        for (std::size_t start = 0; start + len <= span.size(); ++start) {
          Cand& c = cand_map[span.substr(start, len)];
          c.freq += u.freq;
          if (span_is_whole_unit && whole_unit_is_sentence && len == span.size()) {
            c.improper += u.full_sentence_freq;
          }
        }
      }
    }
  }
  std::vector<std::pair<std::u32string_view, double>> candidates;
  candidates.reserve(cand_map.size());
  for (const auto& [text, c] : cand_map) {
    if (c.freq >= 2.0 && c.freq > c.improper) candidates.emplace_back(text, c.freq);
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  const std::size_t seed_cap =
      static_cast<std::size_t>(config.seed_multiplier) *
      static_cast<std::size_t>(config.vocab_size);
  if (candidates.size() > seed_cap) candidates.resize(seed_cap);

  if (chars.size() + candidates.size() < target_pieces) {
    throw TrainError("corpus is too small to reach the requested vocab_size");
  }

  // Seed model: scores proportional to freq * length.
  std::vector<std::u32string> pieces;
  std::vector<double> scores;
  pieces.reserve(chars.size() + candidates.size());
  for (const auto& [cp, f] : chars) {
    pieces.push_back(std::u32string(1, cp));
    scores.push_back(f);
  }
  for (const auto& [text, f] : candidates) {
    pieces.emplace_back(text);
    scores.push_back(f * static_cast<double>(text.size()));
  }
  double score_total = 0.0;
  for (double s : scores) score_total += s;
  std::vector<double> log_probs(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    log_probs[i] = std::log(scores[i] / score_total);
  }

  std::size_t max_piece_cps = 1;
  for (const auto& p : pieces) max_piece_cps = std::max(max_piece_cps, p.size());

  auto build_map = [&](const std::vector<std::u32string>& ps) {
    UnigramModel::PieceMap map;
    map.reserve(ps.size() * 2);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      map.emplace(ps[i], static_cast<int>(i));
    }
    return map;
  };

  auto min_finite = [](const std::vector<double>& lp) {
    double m = 0.0;
    for (double v : lp) {
      if (std::isfinite(v)) m = std::min(m, v);
    }
    return m;
  };

  auto run_em = [&](UnigramModel::PieceMap& map) {
    for (int it = 0; it < config.em_iterations_per_round; ++it) {
      detail::Lattice lat{&map, log_probs.data(), max_piece_cps,
                          min_finite(log_probs) - 10.0, config.char_fallback};
      std::vector<double> counts(pieces.size(), 0.0);
      e_step(units, lat, counts);
      double total = 0.0;
      for (double c : counts) total += c;
      const double log_total = std::log(total);
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        log_probs[i] = counts[i] > 0.0 ? std::log(counts[i]) - log_total : kNegInf;
      }
    }
  };

  UnigramModel::PieceMap map = build_map(pieces);
  while (true) {
    run_em(map);
    if (pieces.size() <= target_pieces) break;

    const std::size_t keep = std::max(
        target_pieces,
        static_cast<std::size_t>(static_cast<double>(pieces.size()) *
                                 config.shrink_factor));
    detail::Lattice lat{&map, log_probs.data(), max_piece_cps,
                        min_finite(log_probs) - 10.0, config.char_fallback};
    const std::vector<double> usage = viterbi_counts(units, lat, pieces.size());

    // Likelihood loss of removing each multi-character piece: its Viterbi
    // occurrences fall back to the best alternative segmentation.
    struct Loss {
      double loss;
      std::size_t index;
    };
    std::vector<Loss> prunable;
    prunable.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].size() <= 1) continue;  // single chars guarantee coverage
      double loss = 0.0;
      if (usage[i] > 0.0 && log_probs[i] != kNegInf) {
        detail::Lattice alt_lat = lat;
        alt_lat.banned_full_span_id = static_cast<int>(i);
        const double alt = detail::viterbi_best(alt_lat, pieces[i]).score;
        loss = usage[i] * (log_probs[i] - alt);
      }
      prunable.push_back(Loss{loss, i});
    }
    std::sort(prunable.begin(), prunable.end(), [&](const Loss& a, const Loss& b) {
      if (a.loss != b.loss) return a.loss < b.loss;
      return pieces[a.index] < pieces[b.index];
    });

    const std::size_t n_remove = pieces.size() - keep;
    std::vector<char> remove(pieces.size(), 0);
    for (std::size_t r = 0; r < n_remove; ++r) remove[prunable[r].index] = 1;

    std::vector<std::u32string> next_pieces;
    std::vector<double> next_log_probs;
    next_pieces.reserve(keep);
    next_log_probs.reserve(keep);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (!remove[i]) {
        next_pieces.push_back(std::move(pieces[i]));
        next_log_probs.push_back(log_probs[i]);
      }
    }
    pieces = std::move(next_pieces);
    log_probs = std::move(next_log_probs);
    max_piece_cps = 1;
    for (const auto& p : pieces) max_piece_cps = std::max(max_piece_cps, p.size());
    map = build_map(pieces);
  }

  // Zero-probability stragglers would not serialize; floor and renormalize.
  const double floor_lp = min_finite(log_probs) - 30.0;
  for (double& lp : log_probs) {
    if (lp == kNegInf) lp = floor_lp;
  }
  const double lse = log_sum_exp(log_probs);
  for (double& lp : log_probs) lp -= lse;

  std::vector<std::pair<std::string, double>> final_pieces;
  final_pieces.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    final_pieces.emplace_back(uni::to_utf8(pieces[i]), log_probs[i]);
  }
  return UnigramModel(std::move(final_pieces), config.special_tokens,
                      config.char_fallback, config.mode_tag);
}

std::pair<UnigramModel, double> em_step(const UnigramModel& model,
                                        std::span<const std::string> corpus) {
  if (corpus.empty()) throw TrainError("empty corpus");

  // Per-word EM is only valid when no piece carries an interior boundary
  // symbol; otherwise fall back to whole-sentence lattices.
  bool per_word = true;
  for (const auto& [piece, id] : model.piece_map()) {
    (void)id;
    if (piece.find(kBoundaryChar, 1) != std::u32string::npos) {
      per_word = false;
      break;
    }
  }

  std::vector<std::u32string> specials_u32;
  for (std::size_t i = 0; i < model.special_count(); ++i) {
    specials_u32.push_back(uni::to_u32(model.piece(static_cast<int>(i))));
  }

  std::vector<Unit> units = build_units(corpus, !per_word);
  if (units.empty()) throw TrainError("corpus contains no text");
  for (Unit& u : units) u.spans = piece_spans(u.text, specials_u32, {});

  std::vector<double> log_probs(model.vocab_size());
  for (std::size_t id = 0; id < model.vocab_size(); ++id) {
    log_probs[id] = model.log_prob(static_cast<int>(id));
  }
  detail::Lattice lat{&model.piece_map(), log_probs.data(),
                      model.max_piece_cps(), model.fallback_log_prob(),
                      model.char_fallback()};
  std::vector<double> counts(model.vocab_size(), 0.0);
  const double ll = e_step(units, lat, counts);

  double total = 0.0;
  for (std::size_t id = model.special_count(); id < counts.size(); ++id) {
    total += counts[id];
  }
  if (!(total > 0.0)) throw TrainError("corpus contains no segmentable text");
  const double log_total = std::log(total);

  std::vector<std::pair<std::string, double>> new_pieces;
  new_pieces.reserve(model.vocab_size() - model.special_count());
  std::vector<std::string> specials;
  for (std::size_t id = 0; id < model.special_count(); ++id) {
    specials.push_back(model.piece(static_cast<int>(id)));
  }
  for (std::size_t id = model.special_count(); id < model.vocab_size(); ++id) {
    const double lp =
        counts[id] > 0.0 ? std::log(counts[id]) - log_total : kNegInf;
    new_pieces.emplace_back(model.piece(static_cast<int>(id)), lp);
  }
  UnigramModel next(std::move(new_pieces), std::move(specials),
                    model.char_fallback(), model.mode_tag());
  return {std::move(next), ll};
}

}  // namespace tweetpiece
