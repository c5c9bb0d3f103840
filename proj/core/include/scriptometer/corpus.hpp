// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scriptometer {

/// Philological metadata for one witness (one manuscript instance of a text).
struct WitnessMeta {
  std::string id;
  std::string source;
  std::optional<std::string> deaf_sigla;
  std::optional<std::string> ms_base;
  std::optional<std::string> editor;
  std::optional<std::string> place_wit;
  std::optional<std::string> date_wit;
  std::optional<std::string> place_text;
  std::optional<std::string> date_text;

  friend bool operator==(const WitnessMeta&, const WitnessMeta&) = default;
};

struct Witness {
  WitnessMeta meta;
  std::vector<std::string> tokens;  // normalized forms, text order
};

/// True when `id` is nonempty and free of whitespace and the Newick
/// metacharacters , ; ( ) : so it can label a tree leaf verbatim.
bool is_valid_witness_id(std::string_view id) noexcept;

struct NormalizationConfig {
  std::vector<std::pair<char32_t, char32_t>> char_map{{U'j', U'i'}, {U'v', U'u'}};
  bool case_fold = true;
  bool strip_diacritics = false;
  bool apostrophe_splits = true;
  /// Non-letter characters kept inside a token (e.g. U"-" to keep hyphenated
  /// compounds whole). Letters and combining marks are always in-word.
  std::u32string in_word_marks;

  /// Throws Error(corpus_ingest) when normalization would not be idempotent:
  /// a map target that is itself remapped, a duplicate source with a
  /// different target, a whitespace target, or a target changed by case
  /// folding or diacritic stripping while those are enabled.
  void validate() const;

  friend bool operator==(const NormalizationConfig&, const NormalizationConfig&) = default;
};

/// Reads a normalization config file:
///
///     # comment
///     case_fold = true
///     strip_diacritics = false
///     apostrophe_splits = true
///     in_word_marks = -
///     j>i
///     v>u
///
/// Any `from>to` line replaces the default map; `char_map = none` clears it.
/// Unset keys keep their defaults. The result is validated.
NormalizationConfig parse_normalization_config(std::string_view text);
NormalizationConfig load_normalization_config(const std::filesystem::path& path);

/// Normalized forms to drop from every witness.
class Stoplist {
 public:
  Stoplist() = default;
  /// One form per line; blank lines and lines starting with '#' ignored.
  /// Entries are normalized with `config` so they compare against tokens.
  static Stoplist parse(std::string_view text, const NormalizationConfig& config);
  static Stoplist load(const std::filesystem::path& path, const NormalizationConfig& config);

  bool contains(const std::string& form) const { return forms_.contains(form); }
  const std::set<std::string>& forms() const noexcept { return forms_; }

 private:
  std::set<std::string> forms_;
};

/// Splits raw text into graphic forms. A token is a maximal run of letters,
/// combining marks and configured in-word marks; apostrophes end a token and
/// are discarded when apostrophe_splits is set, else they are in-word.
/// Invalid UTF-8 bytes act as separators. No normalization is applied.
std::vector<std::string> tokenize(std::string_view raw, const NormalizationConfig& config);

/// Case fold, then char_map, then optional diacritic stripping (with the map
/// applied again to the stripped base letters). Idempotent for any config
/// that passes validate().
std::string normalize_form(std::string_view form, const NormalizationConfig& config);

/// tokenize + normalize_form + stoplist filter; empty results are dropped.
std::vector<std::string> normalized_tokens(std::string_view raw, const NormalizationConfig& config,
                                           const Stoplist* stoplist = nullptr);

/// Parses the metadata CSV (header must contain an `id` column; known columns
/// are id,source,deaf,ms_base,ed,place_wit,date_wit,place_text,date_text).
/// Checks id validity and uniqueness.
std::vector<WitnessMeta> parse_metadata(std::string_view csv_text);

/// Loads `<text_dir>/<id>.txt` for every metadata row, in metadata order.
/// Reports every missing file in one error.
std::vector<Witness> load_corpus(const std::filesystem::path& text_dir,
                                 const std::filesystem::path& metadata_path,
                                 const NormalizationConfig& config,
                                 const Stoplist* stoplist = nullptr);

struct FilterResult {
  std::vector<Witness> kept;
  std::vector<std::string> dropped;
};

/// Keeps witnesses with at least `min_tokens` tokens, in order.
FilterResult filter_short(std::vector<Witness> witnesses, std::size_t min_tokens);

}  // namespace scriptometer
