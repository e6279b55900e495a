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

#include "tweetpiece/unicode.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace tweetpiece::uni {

namespace {

struct Range {
  char32_t lo;
  char32_t hi;
};

bool in_ranges(char32_t cp, const Range* ranges, std::size_t n) {
  std::size_t lo = 0, hi = n;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cp < ranges[mid].lo) {
      hi = mid;
    } else if (cp > ranges[mid].hi) {
      lo = mid + 1;
    } else {
      return true;
    }
  }
  return false;
}

// Mn/Mc/Me ranges for the scripts we care about, plus variation selectors,
// emoji modifiers and tag characters (all grapheme extenders).
constexpr Range kCombining[] = {
    {0x0300, 0x036F}, {0x0483, 0x0489}, {0x0591, 0x05BD}, {0x05BF, 0x05BF},
    {0x05C1, 0x05C2}, {0x05C4, 0x05C5}, {0x05C7, 0x05C7}, {0x0610, 0x061A},
    {0x064B, 0x065F}, {0x0670, 0x0670}, {0x06D6, 0x06DC}, {0x06DF, 0x06E4},
    {0x06E7, 0x06E8}, {0x06EA, 0x06ED}, {0x0711, 0x0711}, {0x0730, 0x074A},
    {0x07A6, 0x07B0}, {0x07EB, 0x07F3}, {0x0816, 0x0819}, {0x081B, 0x0823},
    {0x0825, 0x0827}, {0x0829, 0x082D}, {0x0859, 0x085B}, {0x08D3, 0x08FF},
    {0x0900, 0x0903}, {0x093A, 0x093C}, {0x093E, 0x094F}, {0x0951, 0x0957},
    {0x0962, 0x0963}, {0x0981, 0x0983}, {0x09BC, 0x09BC}, {0x09BE, 0x09C4},
    {0x0E31, 0x0E31}, {0x0E34, 0x0E3A}, {0x0E47, 0x0E4E}, {0x0EB1, 0x0EB1},
    {0x0EB4, 0x0EBC}, {0x0EC8, 0x0ECD}, {0x102B, 0x103E}, {0x1056, 0x1059},
    {0x135D, 0x135F}, {0x1712, 0x1714}, {0x17B4, 0x17D3}, {0x180B, 0x180D},
    {0x1AB0, 0x1AFF}, {0x1B00, 0x1B04}, {0x1DC0, 0x1DFF}, {0x20D0, 0x20FF},
    {0x2CEF, 0x2CF1}, {0x2DE0, 0x2DFF}, {0xA66F, 0xA672}, {0xA674, 0xA67D},
    {0xA69E, 0xA69F}, {0xFB1E, 0xFB1E}, {0xFE00, 0xFE0F}, {0xFE20, 0xFE2F},
    {0x101FD, 0x101FD}, {0x10376, 0x1037A}, {0x11000, 0x11002},
    {0x1D165, 0x1D169}, {0x1D16D, 0x1D172}, {0x1D17B, 0x1D182},
    {0x1F3FB, 0x1F3FF}, {0xE0020, 0xE007F}, {0xE0100, 0xE01EF},
};

// Blocks whose characters default to emoji presentation.
constexpr Range kEmojiBase[] = {
    {0x231A, 0x231B}, {0x23E9, 0x23EC}, {0x23F0, 0x23F0}, {0x23F3, 0x23F3},
    {0x25FD, 0x25FE}, {0x2600, 0x27BF}, {0x2934, 0x2935}, {0x2B05, 0x2B07},
    {0x2B1B, 0x2B1C}, {0x2B50, 0x2B50}, {0x2B55, 0x2B55}, {0x3030, 0x3030},
    {0x303D, 0x303D}, {0x3297, 0x3297}, {0x3299, 0x3299}, {0x1F004, 0x1F004},
    {0x1F0CF, 0x1F0CF}, {0x1F170, 0x1F251}, {0x1F300, 0x1F6FF},
    {0x1F700, 0x1F77F}, {0x1F780, 0x1F7FF}, {0x1F900, 0x1F9FF},
    {0x1FA00, 0x1FAFF},
};

// Symbols that render as text unless followed by VS16.
constexpr Range kTextDefaultEmoji[] = {
    {0x00A9, 0x00A9}, {0x00AE, 0x00AE}, {0x203C, 0x203C}, {0x2049, 0x2049},
    {0x2122, 0x2122}, {0x2139, 0x2139}, {0x2194, 0x21AA}, {0x24C2, 0x24C2},
    {0x25AA, 0x25FC}, {0x2B06, 0x2B07},
};

constexpr char32_t kZwj = 0x200D;
constexpr char32_t kVs16 = 0xFE0F;
constexpr char32_t kKeycap = 0x20E3;

// Hangul syllable classes for grapheme clustering.
enum class Hangul { none, L, V, T, LV, LVT };

Hangul hangul_class(char32_t cp) {
  if ((cp >= 0x1100 && cp <= 0x115F) || (cp >= 0xA960 && cp <= 0xA97C)) return Hangul::L;
  if ((cp >= 0x1160 && cp <= 0x11A7) || (cp >= 0xD7B0 && cp <= 0xD7C6)) return Hangul::V;
  if ((cp >= 0x11A8 && cp <= 0x11FF) || (cp >= 0xD7CB && cp <= 0xD7FB)) return Hangul::T;
  if (cp >= 0xAC00 && cp <= 0xD7A3) {
    return ((cp - 0xAC00) % 28 == 0) ? Hangul::LV : Hangul::LVT;
  }
  return Hangul::none;
}

struct CaseEntry {
  char32_t upper;
  char32_t lower;
};

// Irregular single mappings not covered by the range rules below.
constexpr CaseEntry kCaseExceptions[] = {
    {0x0130, 0x0069},  // I with dot above -> i
    {0x0178, 0x00FF},  // Y with diaeresis
    {0x0181, 0x0253}, {0x0186, 0x0254}, {0x018A, 0x0257}, {0x018E, 0x01DD},
    {0x018F, 0x0259}, {0x0190, 0x025B}, {0x0193, 0x0260}, {0x0194, 0x0263},
    {0x0196, 0x0269}, {0x0197, 0x0268}, {0x019C, 0x026F}, {0x019D, 0x0272},
    {0x019F, 0x0275}, {0x01A6, 0x0280}, {0x01A9, 0x0283}, {0x01AE, 0x0288},
    {0x01B1, 0x028A}, {0x01B2, 0x028B}, {0x01B7, 0x0292},
    {0x0386, 0x03AC}, {0x0388, 0x03AD}, {0x0389, 0x03AE}, {0x038A, 0x03AF},
    {0x038C, 0x03CC}, {0x038E, 0x03CD}, {0x038F, 0x03CE},
};

struct AccentEntry {
  char32_t composed;
  char32_t base;
};

// Canonical-decomposition bases for precomposed letters (both cases where
// the pairs are not mechanical). Derived from NFD: only letters that
// decompose to base + combining marks appear here.
constexpr AccentEntry kAccentMap[] = {
    // Latin-1 Supplement, uppercase.
    {0x00C0, 'A'}, {0x00C1, 'A'}, {0x00C2, 'A'}, {0x00C3, 'A'}, {0x00C4, 'A'},
    {0x00C5, 'A'}, {0x00C7, 'C'}, {0x00C8, 'E'}, {0x00C9, 'E'}, {0x00CA, 'E'},
    {0x00CB, 'E'}, {0x00CC, 'I'}, {0x00CD, 'I'}, {0x00CE, 'I'}, {0x00CF, 'I'},
    {0x00D1, 'N'}, {0x00D2, 'O'}, {0x00D3, 'O'}, {0x00D4, 'O'}, {0x00D5, 'O'},
    {0x00D6, 'O'}, {0x00D9, 'U'}, {0x00DA, 'U'}, {0x00DB, 'U'}, {0x00DC, 'U'},
    {0x00DD, 'Y'},
    // Latin-1 Supplement, lowercase.
    {0x00E0, 'a'}, {0x00E1, 'a'}, {0x00E2, 'a'}, {0x00E3, 'a'}, {0x00E4, 'a'},
    {0x00E5, 'a'}, {0x00E7, 'c'}, {0x00E8, 'e'}, {0x00E9, 'e'}, {0x00EA, 'e'},
    {0x00EB, 'e'}, {0x00EC, 'i'}, {0x00ED, 'i'}, {0x00EE, 'i'}, {0x00EF, 'i'},
    {0x00F1, 'n'}, {0x00F2, 'o'}, {0x00F3, 'o'}, {0x00F4, 'o'}, {0x00F5, 'o'},
    {0x00F6, 'o'}, {0x00F9, 'u'}, {0x00FA, 'u'}, {0x00FB, 'u'}, {0x00FC, 'u'},
    {0x00FD, 'y'}, {0x00FF, 'y'},
    // Greek with tonos/dialytika.
    {0x0386, 0x0391}, {0x0388, 0x0395}, {0x0389, 0x0397}, {0x038A, 0x0399},
    {0x038C, 0x039F}, {0x038E, 0x03A5}, {0x038F, 0x03A9}, {0x0390, 0x03B9},
    {0x03AA, 0x0399}, {0x03AB, 0x03A5}, {0x03AC, 0x03B1}, {0x03AD, 0x03B5},
    {0x03AE, 0x03B7}, {0x03AF, 0x03B9}, {0x03B0, 0x03C5}, {0x03CA, 0x03B9},
    {0x03CB, 0x03C5}, {0x03CC, 0x03BF}, {0x03CD, 0x03C5}, {0x03CE, 0x03C9},
    // Cyrillic.
    {0x0400, 0x0415}, {0x0401, 0x0415}, {0x0403, 0x0413}, {0x0407, 0x0406},
    {0x040C, 0x041A}, {0x040D, 0x0418}, {0x040E, 0x0423}, {0x0419, 0x0418},
    {0x0439, 0x0438}, {0x0450, 0x0435}, {0x0451, 0x0435}, {0x0453, 0x0433},
    {0x0457, 0x0456}, {0x045C, 0x043A}, {0x045D, 0x0438}, {0x045E, 0x0443},
};

struct ExtARange {
  char32_t lo;
  char32_t hi;
  char32_t base_upper;
  char32_t base_lower;
};

// Latin Extended-A decomposes mechanically in contiguous groups.
constexpr ExtARange kExtA[] = {
    {0x0100, 0x0105, 'A', 'a'}, {0x0106, 0x010D, 'C', 'c'},
    {0x010E, 0x010F, 'D', 'd'}, {0x0112, 0x011B, 'E', 'e'},
    {0x011C, 0x0123, 'G', 'g'}, {0x0124, 0x0125, 'H', 'h'},
    {0x0128, 0x0130, 'I', 'i'}, {0x0134, 0x0135, 'J', 'j'},
    {0x0136, 0x0137, 'K', 'k'}, {0x0139, 0x013E, 'L', 'l'},
    {0x0143, 0x0148, 'N', 'n'}, {0x014C, 0x0151, 'O', 'o'},
    {0x0154, 0x0159, 'R', 'r'}, {0x015A, 0x0161, 'S', 's'},
    {0x0162, 0x0165, 'T', 't'}, {0x0168, 0x0173, 'U', 'u'},
    {0x0174, 0x0175, 'W', 'w'}, {0x0176, 0x0177, 'Y', 'y'},
    {0x0179, 0x017E, 'Z', 'z'},
    // Latin Extended-B decomposables in regular pairs.
    {0x01CD, 0x01CE, 'A', 'a'}, {0x01CF, 0x01D0, 'I', 'i'},
    {0x01D1, 0x01D2, 'O', 'o'}, {0x01D3, 0x01DC, 'U', 'u'},
    {0x01DE, 0x01E1, 'A', 'a'}, {0x01E6, 0x01E7, 'G', 'g'},
    {0x01E8, 0x01E9, 'K', 'k'}, {0x01EA, 0x01ED, 'O', 'o'},
    {0x01F4, 0x01F5, 'G', 'g'}, {0x01F8, 0x01F9, 'N', 'n'},
    {0x0200, 0x0203, 'A', 'a'}, {0x0204, 0x0207, 'E', 'e'},
    {0x0208, 0x020B, 'I', 'i'}, {0x020C, 0x020F, 'O', 'o'},
    {0x0210, 0x0213, 'R', 'r'}, {0x0214, 0x0217, 'U', 'u'},
    {0x0218, 0x0219, 'S', 's'}, {0x021A, 0x021B, 'T', 't'},
    {0x021E, 0x021F, 'H', 'h'}, {0x0226, 0x0227, 'A', 'a'},
    {0x0228, 0x0229, 'E', 'e'}, {0x022A, 0x0231, 'O', 'o'},
    {0x0232, 0x0233, 'Y', 'y'},
    // Vietnamese additional blocks, grouped per base vowel.
    {0x1EA0, 0x1EB7, 'A', 'a'}, {0x1EB8, 0x1EC7, 'E', 'e'},
    {0x1EC8, 0x1ECB, 'I', 'i'}, {0x1ECC, 0x1EE3, 'O', 'o'},
    {0x1EE4, 0x1EF1, 'U', 'u'}, {0x1EF2, 0x1EF9, 'Y', 'y'},
    // Horned vowels.
    {0x01A0, 0x01A1, 'O', 'o'}, {0x01AF, 0x01B0, 'U', 'u'},
};

}  // namespace

std::size_t decode_one(std::string_view text, std::size_t pos, char32_t& cp) {
  if (pos >= text.size()) return 0;
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) {
    cp = b0;
    return 1;
  }
  std::size_t len = 0;
  char32_t value = 0;
  char32_t min_value = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    value = b0 & 0x1F;
    min_value = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    value = b0 & 0x0F;
    min_value = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    value = b0 & 0x07;
    min_value = 0x10000;
  } else {
    return 0;
  }
  if (pos + len > text.size()) return 0;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) return 0;
    value = (value << 6) | (b & 0x3F);
  }
  if (value < min_value) return 0;                     // overlong
  if (value >= 0xD800 && value <= 0xDFFF) return 0;    // surrogate
  if (value > 0x10FFFF) return 0;
  cp = value;
  return len;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = decode_one(text, pos, cp);
    if (n == 0) return false;
    pos += n;
  }
  return true;
}

bool decode_utf8(std::string_view text, std::u32string& out) {
  out.clear();
  out.reserve(text.size());
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = decode_one(text, pos, cp);
    if (n == 0) return false;
    out.push_back(cp);
    pos += n;
  }
  return true;
}

std::u32string to_u32(std::string_view text) {
  std::u32string out;
  if (!decode_utf8(text, out)) {
    throw std::invalid_argument("invalid UTF-8 input");
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string to_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

bool is_whitespace(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x0085: case 0x00A0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_combining_mark(char32_t cp) {
  return in_ranges(cp, kCombining, std::size(kCombining));
}

bool is_regional_indicator(char32_t cp) {
  return cp >= 0x1F1E6 && cp <= 0x1F1FF;
}

bool is_emoji_base(char32_t cp) {
  return in_ranges(cp, kEmojiBase, std::size(kEmojiBase));
}

bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (cp == 0x00D7 || cp == 0x00F7) return false;
  if (cp >= 0x00C0 && cp <= 0x024F) return true;   // Latin-1 / Extended-A/B
  if (cp >= 0x0370 && cp <= 0x03FF) return true;   // Greek
  if (cp >= 0x0400 && cp <= 0x04FF) return true;   // Cyrillic
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true;   // Latin Extended Additional
  if (cp == 0x00AA || cp == 0x00BA) return true;   // ordinal indicators
  return false;
}

bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_word_char(char32_t cp) {
  return cp == '_' || is_digit(cp) || is_letter(cp);
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  for (const auto& e : kCaseExceptions) {
    if (e.upper == cp) return e.lower;
  }
  if (cp >= 0x0100 && cp <= 0x0177) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0x0179 && cp <= 0x017E) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if ((cp >= 0x01CD && cp <= 0x01DC) || (cp >= 0x01DE && cp <= 0x01EF) ||
      (cp >= 0x01F4 && cp <= 0x01F5) || (cp >= 0x01F8 && cp <= 0x021F) ||
      (cp >= 0x0222 && cp <= 0x0233)) {
    return (cp % 2 == 1) ? cp : cp + 1;
  }
  if (cp == 0x01A0 || cp == 0x01AF) return cp + 1;
  if (cp >= 0x0391 && cp <= 0x03AB && cp != 0x03A2) return cp + 0x20;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  if (cp >= 0x1E00 && cp <= 0x1EFF) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;  // fullwidth
  return cp;
}

bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

char32_t strip_accent(char32_t cp) {
  if (cp < 0x00C0) return cp;
  for (const auto& e : kAccentMap) {
    if (e.composed == cp) return e.base;
  }
  for (const auto& r : kExtA) {
    if (cp >= r.lo && cp <= r.hi) {
      // Within a group, uppercase letters map to the uppercase base.
      return is_upper(cp) ? r.base_upper : r.base_lower;
    }
  }
  return cp;
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const std::size_t n = decode_one(text, pos, cp);
    if (n == 0) throw std::invalid_argument("invalid UTF-8 input");
    append_utf8(out, to_lower(cp));
    pos += n;
  }
  return out;
}

namespace {

enum class GB {
  other, cr, lf, control, extend, zwj, ri, pictographic,
  hangul_l, hangul_v, hangul_t, hangul_lv, hangul_lvt,
};

GB gb_class(char32_t cp) {
  if (cp == '\r') return GB::cr;
  if (cp == '\n') return GB::lf;
  if (cp == kZwj) return GB::zwj;
  if (cp == 0x200C) return GB::extend;
  if (cp < 0x20 || cp == 0x7F) return GB::control;
  if (is_regional_indicator(cp)) return GB::ri;
  if (is_combining_mark(cp)) return GB::extend;
  switch (hangul_class(cp)) {
    case Hangul::L: return GB::hangul_l;
    case Hangul::V: return GB::hangul_v;
    case Hangul::T: return GB::hangul_t;
    case Hangul::LV: return GB::hangul_lv;
    case Hangul::LVT: return GB::hangul_lvt;
    case Hangul::none: break;
  }
  if (is_emoji_base(cp)) return GB::pictographic;
  return GB::other;
}

}  // namespace

std::size_t next_grapheme(std::string_view text, std::size_t pos) {
  char32_t cp;
  std::size_t n = decode_one(text, pos, cp);
  if (n == 0) return std::min(pos + 1, text.size());  // skip the bad byte
  GB prev = gb_class(cp);
  bool prev_was_pictographic_seq = (prev == GB::pictographic);
  int ri_count = (prev == GB::ri) ? 1 : 0;
  pos += n;
  while (pos < text.size()) {
    char32_t next_cp;
    n = decode_one(text, pos, next_cp);
    if (n == 0) break;
    const GB cur = gb_class(next_cp);
    bool join = false;
    if (prev == GB::cr && cur == GB::lf) {
      join = true;
    } else if (prev == GB::cr || prev == GB::lf || prev == GB::control ||
               cur == GB::cr || cur == GB::lf || cur == GB::control) {
      join = false;
    } else if (cur == GB::extend || cur == GB::zwj) {
      join = true;  // prev_was_pictographic_seq survives extenders
    } else if (prev == GB::zwj && cur == GB::pictographic &&
               prev_was_pictographic_seq) {
      join = true;
    } else if (prev == GB::ri && cur == GB::ri && ri_count % 2 == 1) {
      join = true;
      ++ri_count;
    } else if (prev == GB::hangul_l &&
               (cur == GB::hangul_l || cur == GB::hangul_v ||
                cur == GB::hangul_lv || cur == GB::hangul_lvt)) {
      join = true;
    } else if ((prev == GB::hangul_lv || prev == GB::hangul_v) &&
               (cur == GB::hangul_v || cur == GB::hangul_t)) {
      join = true;
    } else if ((prev == GB::hangul_lvt || prev == GB::hangul_t) &&
               cur == GB::hangul_t) {
      join = true;
    }
    if (!join) break;
    if (cur == GB::pictographic) {
      prev_was_pictographic_seq = true;
    } else if (cur != GB::extend && cur != GB::zwj) {
      prev_was_pictographic_seq = false;
    }
    if (cur != GB::extend) prev = cur;
    pos += n;
  }
  return pos;
}

std::vector<std::string_view> graphemes(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = next_grapheme(text, pos);
    out.push_back(text.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool is_emoji_grapheme(std::string_view grapheme) {
  char32_t first;
  if (decode_one(grapheme, 0, first) == 0) return false;
  if (is_emoji_base(first) || is_regional_indicator(first)) return true;
  bool has_vs16 = false;
  bool has_keycap = false;
  std::size_t pos = 0;
  char32_t cp;
  while (pos < grapheme.size()) {
    const std::size_t n = decode_one(grapheme, pos, cp);
    if (n == 0) return false;
    if (cp == kVs16) has_vs16 = true;
    if (cp == kKeycap) has_keycap = true;
    pos += n;
  }
  if (has_keycap) return true;
  if (has_vs16 &&
      in_ranges(first, kTextDefaultEmoji, std::size(kTextDefaultEmoji))) {
    return true;
  }
  return false;
}

}  // namespace tweetpiece::uni
