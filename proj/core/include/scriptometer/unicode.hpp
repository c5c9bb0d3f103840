// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal Unicode support for Latin-script editions: UTF-8 coding, letter
// classification, simple case folding and diacritic stripping. Coverage is
// Basic Latin, Latin-1 Supplement, Latin Extended-A/B, combining diacritics,
// Latin Extended Additional, Greek, Cyrillic and Latin Extended-D. Tables are
// compiled in so results never depend on the process locale.

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace scriptometer::unicode {

inline constexpr char32_t replacement_char = 0xFFFD;

/// Decodes UTF-8. Malformed sequences become U+FFFD.
std::u32string decode(std::string_view utf8);

/// Like decode() but reports the byte offset of the first malformed sequence.
std::optional<std::size_t> first_invalid_offset(std::string_view utf8);

std::string encode(std::u32string_view text);
void append(std::string& out, char32_t cp);

bool is_letter(char32_t cp) noexcept;
bool is_combining_mark(char32_t cp) noexcept;
bool is_apostrophe(char32_t cp) noexcept;
bool is_whitespace(char32_t cp) noexcept;

/// Simple one-to-one lowercase mapping. Long s folds to s.
char32_t fold_case(char32_t cp) noexcept;

/// Base letter of a precomposed Latin letter; nullopt for a combining mark
/// (which is dropped); the input itself when it carries no diacritic.
std::optional<char32_t> strip_diacritic(char32_t cp) noexcept;

}  // namespace scriptometer::unicode
