// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/unicode.hpp"

#include <string_view>

namespace scriptometer::unicode {
namespace {

// Byte length of a sequence and its decoded value; length 0 means malformed.
struct Decoded {
  char32_t cp;
  std::size_t length;
};

Decoded decode_one(std::string_view s, std::size_t i) noexcept {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) return {b0, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return {replacement_char, 0};
  }
  if (i + len > s.size()) return {replacement_char, 0};
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return {replacement_char, 0};
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {replacement_char, 0};
  return {cp, len};
}

// Diacritic-free base letters for U+00C0..U+017F; '.' marks "no change".
constexpr std::string_view kLatin1Base =
    "AAAAAA.CEEEEIIII"
    ".NOOOOO.OUUUUY.."
    "aaaaaa.ceeeeiiii"
    ".nooooo.ouuuuy.y";
constexpr std::string_view kLatinExtABase =
    "AaAaAaCcCcCcCcDd"
    "DdEeEeEeEeEeGgGg"
    "GgGgHhHhIiIiIiIi"
    "I...JjKk.LlLlLlL"
    "lLlNnNnNn...OoOo"
    "Oo..RrRrRrSsSsSs"
    "SsTtTtTtUuUuUuUu"
    "UuUuWwYyYZzZzZz.";
// U+01CD..U+01DC (caron and diaeresis-plus-accent vowels).
constexpr std::string_view kPinyinBase = "AaIiOoUuUuUuUuUu";

constexpr bool in(char32_t cp, char32_t lo, char32_t hi) noexcept { return cp >= lo && cp <= hi; }
constexpr bool even(char32_t cp) noexcept { return (cp & 1u) == 0; }

}  // namespace

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    Decoded d = decode_one(utf8, i);
    out.push_back(d.cp);
    i += d.length == 0 ? 1 : d.length;
  }
  return out;
}

std::optional<std::size_t> first_invalid_offset(std::string_view utf8) {
  std::size_t i = 0;
  while (i < utf8.size()) {
    Decoded d = decode_one(utf8, i);
    if (d.length == 0) return i;
    i += d.length;
  }
  return std::nullopt;
}

void append(std::string& out, char32_t cp) {
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

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append(out, cp);
  return out;
}

bool is_letter(char32_t cp) noexcept {
  if (cp < 0x80) return in(cp, 'A', 'Z') || in(cp, 'a', 'z');
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (in(cp, 0xC0, 0xFF)) return cp != 0xD7 && cp != 0xF7;
  if (in(cp, 0x0100, 0x02AF)) return true;
  if (in(cp, 0x0370, 0x03FF))
    return !(cp == 0x0374 || cp == 0x0375 || cp == 0x037E || in(cp, 0x0384, 0x0385) || cp == 0x0387);
  if (in(cp, 0x0400, 0x0481) || in(cp, 0x048A, 0x052F)) return true;
  if (in(cp, 0x1E00, 0x1EFF)) return true;
  if (in(cp, 0xA722, 0xA7FF)) return true;
  if (in(cp, 0xAB30, 0xAB5A) || in(cp, 0xAB5C, 0xAB6F)) return true;
  if (in(cp, 0xFB00, 0xFB06)) return true;
  return false;
}

bool is_combining_mark(char32_t cp) noexcept {
  return in(cp, 0x0300, 0x036F) || in(cp, 0x0483, 0x0489) || in(cp, 0x1AB0, 0x1AFF) ||
         in(cp, 0x1DC0, 0x1DFF) || in(cp, 0x20D0, 0x20FF) || in(cp, 0xFE20, 0xFE2F);
}

bool is_apostrophe(char32_t cp) noexcept { return cp == 0x27 || cp == 0x2019 || cp == 0x02BC; }

bool is_whitespace(char32_t cp) noexcept {
  return cp == ' ' || in(cp, 0x09, 0x0D) || cp == 0x85 || cp == 0xA0 || cp == 0x1680 ||
         in(cp, 0x2000, 0x200A) || cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000 || cp == 0xFEFF;
}

char32_t fold_case(char32_t cp) noexcept {
  if (cp < 0x80) return in(cp, 'A', 'Z') ? cp + 32 : cp;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;
  if (cp < 0x0100) return cp;

  // Latin Extended-A
  if (in(cp, 0x0100, 0x012F) || in(cp, 0x0132, 0x0137) || in(cp, 0x014A, 0x0177))
    return even(cp) ? cp + 1 : cp;
  if (cp == 0x0130) return 'i';
  if (in(cp, 0x0139, 0x0148) || in(cp, 0x0179, 0x017E)) return even(cp) ? cp : cp + 1;
  if (cp == 0x0178) return 0xFF;
  if (cp == 0x017F) return 's';

  // Latin Extended-B, the regular runs only
  if (in(cp, 0x01CD, 0x01DC)) return even(cp) ? cp : cp + 1;
  if (in(cp, 0x01DE, 0x01EF) || in(cp, 0x01F8, 0x021F) || in(cp, 0x0222, 0x0233))
    return even(cp) ? cp + 1 : cp;

  // Greek
  if (in(cp, 0x0391, 0x03A1) || in(cp, 0x03A3, 0x03AB)) return cp + 32;
  if (cp == 0x0386) return 0x03AC;
  if (in(cp, 0x0388, 0x038A)) return cp + 37;
  if (cp == 0x038C) return 0x03CC;
  if (in(cp, 0x038E, 0x038F)) return cp + 63;

  // Cyrillic
  if (in(cp, 0x0410, 0x042F)) return cp + 32;
  if (in(cp, 0x0400, 0x040F)) return cp + 80;
  if (in(cp, 0x0460, 0x0481) || in(cp, 0x048A, 0x04BF) || in(cp, 0x04D0, 0x052F))
    return even(cp) ? cp + 1 : cp;
  if (in(cp, 0x04C1, 0x04CE)) return even(cp) ? cp : cp + 1;
  if (cp == 0x04C0) return 0x04CF;

  // Latin Extended Additional
  if (in(cp, 0x1E00, 0x1E95) || in(cp, 0x1EA0, 0x1EFF)) return even(cp) ? cp + 1 : cp;
  if (cp == 0x1E9E) return 0xDF;

  // Latin Extended-D
  if (in(cp, 0xA722, 0xA72F) || in(cp, 0xA732, 0xA76F) || in(cp, 0xA77E, 0xA787) ||
      in(cp, 0xA790, 0xA793) || in(cp, 0xA796, 0xA7A9))
    return even(cp) ? cp + 1 : cp;
  if (in(cp, 0xA779, 0xA77C)) return even(cp) ? cp : cp + 1;
  if (cp == 0xA78B) return 0xA78C;
  return cp;
}

std::optional<char32_t> strip_diacritic(char32_t cp) noexcept {
  if (is_combining_mark(cp)) return std::nullopt;
  auto lookup = [cp](std::string_view table, char32_t base) -> char32_t {
    char c = table[cp - base];
    return c == '.' ? cp : static_cast<char32_t>(c);
  };
  if (in(cp, 0x00C0, 0x00FF)) return lookup(kLatin1Base, 0x00C0);
  if (in(cp, 0x0100, 0x017F)) return lookup(kLatinExtABase, 0x0100);
  if (in(cp, 0x01CD, 0x01DC)) return lookup(kPinyinBase, 0x01CD);
  return cp;
}

}  // namespace scriptometer::unicode
