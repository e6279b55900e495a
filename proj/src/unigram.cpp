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

#include "tweetpiece/unigram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "lattice.hpp"
#include "tweetpiece/unicode.hpp"

namespace tweetpiece {

std::vector<std::string> default_special_tokens() {
  return {"<pad>", "<unk>", "<s>", "</s>", "<mask>",
          "@usuario", "hashtag", "emoji"};
}

std::u32string to_boundary_form(std::string_view text) {
  std::u32string cps = uni::to_u32(text);
  for (char32_t& cp : cps) {
    if (uni::is_whitespace(cp)) cp = kBoundaryChar;
  }
  return cps;
}

std::string from_boundary_form(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    uni::append_utf8(out, cp == kBoundaryChar ? U' ' : cp);
  }
  return out;
}

UnigramModel::UnigramModel(std::vector<std::pair<std::string, double>> pieces,
                           std::vector<std::string> specials,
                           bool char_fallback, std::string mode_tag)
    : specials_(std::move(specials)),
      char_fallback_(char_fallback),
      mode_tag_(std::move(mode_tag)) {
  for (std::size_t i = 0; i < specials_.size(); ++i) {
    if (specials_[i].empty()) {
      throw std::invalid_argument("special token must not be empty");
    }
    if (!special_ids_.emplace(specials_[i], static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate special token: " + specials_[i]);
    }
    specials_u32_.push_back(uni::to_u32(specials_[i]));
    max_special_cps_ = std::max(max_special_cps_, specials_u32_.back().size());
  }
  // Deterministic id order: by descending probability, then bytewise.
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  pieces_by_id_.reserve(specials_.size() + pieces.size());
  log_probs_by_id_.reserve(specials_.size() + pieces.size());
  for (const auto& s : specials_) {
    pieces_by_id_.push_back(s);
    log_probs_by_id_.push_back(0.0);
  }
  min_log_prob_ = 0.0;
  for (auto& [text, log_prob] : pieces) {
    if (text.empty()) throw std::invalid_argument("piece must not be empty");
    if (special_ids_.count(text)) {
      throw std::invalid_argument("piece collides with special token: " + text);
    }
    std::u32string cps = uni::to_u32(text);
    max_piece_cps_ = std::max(max_piece_cps_, cps.size());
    const int id = static_cast<int>(pieces_by_id_.size());
    if (!piece_map_.emplace(std::move(cps), id).second) {
      throw std::invalid_argument("duplicate piece: " + text);
    }
    if (std::isfinite(log_prob)) {
      min_log_prob_ = std::min(min_log_prob_, log_prob);
    }
    pieces_by_id_.push_back(std::move(text));
    log_probs_by_id_.push_back(log_prob);
  }

  pad_id_ = special_id("<pad>");
  unk_id_ = special_id("<unk>");
  bos_id_ = special_id("<s>");
  eos_id_ = special_id("</s>");
  mask_id_ = special_id("<mask>");
}

const std::string& UnigramModel::piece(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= pieces_by_id_.size()) {
    throw std::out_of_range("piece id out of range: " + std::to_string(id));
  }
  return pieces_by_id_[static_cast<std::size_t>(id)];
}

double UnigramModel::log_prob(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= log_probs_by_id_.size()) {
    throw std::out_of_range("piece id out of range: " + std::to_string(id));
  }
  return log_probs_by_id_[static_cast<std::size_t>(id)];
}

int UnigramModel::piece_id(std::string_view piece) const {
  auto sp = special_ids_.find(std::string(piece));
  if (sp != special_ids_.end()) return sp->second;
  auto it = piece_map_.find(uni::to_u32(piece));
  return it == piece_map_.end() ? -1 : it->second;
}

int UnigramModel::special_id(std::string_view token) const {
  auto it = special_ids_.find(std::string(token));
  return it == special_ids_.end() ? -1 : it->second;
}

double UnigramModel::probability_mass() const {
  double sum = 0.0;
  for (std::size_t id = specials_.size(); id < log_probs_by_id_.size(); ++id) {
    sum += std::exp(log_probs_by_id_[id]);
  }
  return sum;
}

std::vector<UnigramModel::Edge> UnigramModel::viterbi_edges(
    std::u32string_view span) const {
  const detail::Lattice lat{&piece_map_, log_probs_by_id_.data(),
                            max_piece_cps_, fallback_log_prob(),
                            /*allow_fallback=*/true};
  return detail::viterbi_best(lat, span).edges;
}

std::vector<UnigramModel::Segment> UnigramModel::split_specials(
    std::u32string_view text) const {
  std::vector<Segment> out;
  std::size_t plain_start = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int matched = -1;
    std::size_t matched_len = 0;
    for (std::size_t s = 0; s < specials_u32_.size(); ++s) {
      const std::u32string& tok = specials_u32_[s];
      if (tok.size() > matched_len && pos + tok.size() <= text.size() &&
          text.compare(pos, tok.size(), tok) == 0) {
        matched = static_cast<int>(s);
        matched_len = tok.size();
      }
    }
    if (matched >= 0) {
      if (plain_start < pos) {
        out.push_back(Segment{-1, text.substr(plain_start, pos - plain_start)});
      }
      out.push_back(Segment{matched, text.substr(pos, matched_len)});
      pos += matched_len;
      plain_start = pos;
    } else {
      ++pos;
    }
  }
  if (plain_start < text.size()) {
    out.push_back(Segment{-1, text.substr(plain_start)});
  }
  return out;
}

std::vector<std::string> UnigramModel::viterbi_segment(
    std::string_view text) const {
  const std::u32string cps = to_boundary_form(text);
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (const Edge& e : viterbi_edges(cps)) {
    const std::u32string_view span(cps.data() + pos, e.cps);
    if (e.id >= 0) {
      out.push_back(pieces_by_id_[static_cast<std::size_t>(e.id)]);
    } else if (char_fallback_) {
      out.push_back(uni::to_utf8(span));
    } else if (unk_id_ >= 0) {
      out.push_back(pieces_by_id_[static_cast<std::size_t>(unk_id_)]);
    } else {
      throw std::runtime_error("unknown character and no unk token");
    }
    pos += e.cps;
  }
  return out;
}

std::vector<int> UnigramModel::encode(std::string_view text) const {
  const std::u32string cps = to_boundary_form(text);
  std::vector<int> ids;
  for (const Segment& seg : split_specials(cps)) {
    if (seg.special_id >= 0) {
      ids.push_back(seg.special_id);
      continue;
    }
    for (const Edge& e : viterbi_edges(seg.span)) {
      if (e.id >= 0) {
        ids.push_back(e.id);
      } else if (unk_id_ >= 0) {
        ids.push_back(unk_id_);
      } else {
        throw std::runtime_error("out-of-vocabulary character and no unk token");
      }
    }
  }
  return ids;
}

std::string UnigramModel::decode(std::span<const int> ids) const {
  std::string pieces_text;
  for (int id : ids) {
    pieces_text += piece(id);  // throws on out-of-range
  }
  return from_boundary_form(uni::to_u32(pieces_text));
}

std::string UnigramModel::to_json() const {
  nlohmann::json j;
  j["version"] = 1;
  j["algorithm"] = "unigram";
  j["boundary"] = std::string(kBoundaryUtf8);
  j["char_fallback"] = char_fallback_;
  j["mode"] = mode_tag_;
  j["specials"] = specials_;
  nlohmann::json pieces = nlohmann::json::object();
  for (std::size_t id = specials_.size(); id < pieces_by_id_.size(); ++id) {
    pieces[pieces_by_id_[id]] = log_probs_by_id_[id];
  }
  j["pieces"] = std::move(pieces);
  return j.dump();
}

UnigramModel UnigramModel::from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.contains("version") || j["version"].get<int>() != 1) {
    throw std::runtime_error("unsupported model file version");
  }
  if (j.value("algorithm", "") != "unigram") {
    throw std::runtime_error("unsupported model algorithm");
  }
  std::vector<std::string> specials = j.at("specials").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, double>> pieces;
  for (const auto& [piece, log_prob] : j.at("pieces").items()) {
    pieces.emplace_back(piece, log_prob.get<double>());
  }
  return UnigramModel(std::move(pieces), std::move(specials),
                      j.value("char_fallback", true), j.value("mode", ""));
}

void UnigramModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json() << '\n';
}

UnigramModel UnigramModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json(text);
}

}  // namespace tweetpiece
