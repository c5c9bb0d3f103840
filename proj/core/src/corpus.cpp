// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/corpus.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"
#include "scriptometer/parallel.hpp"
#include "scriptometer/unicode.hpp"

namespace scriptometer {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Module::corpus_ingest, message); }

std::string_view trim(std::string_view s) {
  auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
  auto b = std::find_if(s.begin(), s.end(), not_space);
  auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return b < e ? std::string_view(b, e) : std::string_view{};
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "yes" || value == "1" || value == "on") return true;
  if (value == "false" || value == "no" || value == "0" || value == "off") return false;
  fail(fmt::format("normalization config: '{}' expects a boolean, got '{}'", key, value));
}

std::string describe(char32_t cp) {
  std::string s;
  unicode::append(s, cp);
  return fmt::format("'{}' (U+{:04X})", s, static_cast<std::uint32_t>(cp));
}

char32_t map_char(const NormalizationConfig& config, char32_t cp) {
  for (const auto& [from, to] : config.char_map)
    if (from == cp) return to;
  return cp;
}

}  // namespace

bool is_valid_witness_id(std::string_view id) noexcept {
  if (id.empty()) return false;
  for (unsigned char c : id) {
    if (c <= 0x20 || c == 0x7F) return false;
    if (c == ',' || c == ';' || c == '(' || c == ')' || c == ':') return false;
  }
  for (char32_t cp : unicode::decode(id))
    if (unicode::is_whitespace(cp) || cp == unicode::replacement_char) return false;
  return true;
}

void NormalizationConfig::validate() const {
  std::map<char32_t, char32_t> seen;
  for (const auto& [from, to] : char_map) {
    auto [it, inserted] = seen.emplace(from, to);
    if (!inserted && it->second != to)
      fail(fmt::format("char_map maps {} to two different targets", describe(from)));
  }
  for (const auto& [from, to] : char_map) {
    if (unicode::is_whitespace(to)) fail(fmt::format("char_map target for {} is whitespace", describe(from)));
    if (auto it = seen.find(to); it != seen.end() && it->second != to)
      fail(fmt::format("char_map is not idempotent: target {} is itself mapped to {}", describe(to),
                       describe(it->second)));
    if (case_fold && unicode::fold_case(to) != to)
      fail(fmt::format("char_map target {} is changed by case folding", describe(to)));
    if (strip_diacritics && unicode::strip_diacritic(to) != std::optional<char32_t>(to))
      fail(fmt::format("char_map target {} is changed by diacritic stripping", describe(to)));
  }
}

NormalizationConfig parse_normalization_config(std::string_view text) {
  NormalizationConfig config;
  bool map_replaced = false;
  for (std::string_view raw : split_lines(text)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (auto eq = line.find('='); eq != std::string_view::npos) {
      std::string_view key = trim(line.substr(0, eq));
      std::string_view value = trim(line.substr(eq + 1));
      if (key == "case_fold") {
        config.case_fold = parse_bool(key, value);
      } else if (key == "strip_diacritics") {
        config.strip_diacritics = parse_bool(key, value);
      } else if (key == "apostrophe_splits") {
        config.apostrophe_splits = parse_bool(key, value);
      } else if (key == "in_word_marks") {
        config.in_word_marks = unicode::decode(value);
      } else if (key == "char_map") {
        if (value != "none") fail(fmt::format("normalization config: char_map accepts only 'none', got '{}'", value));
        config.char_map.clear();
        map_replaced = true;
      } else {
        fail(fmt::format("normalization config: unknown key '{}'", key));
      }
      continue;
    }

    auto gt = line.find('>');
    if (gt == std::string_view::npos)
      fail(fmt::format("normalization config: cannot parse line '{}'", line));
    std::u32string from = unicode::decode(trim(line.substr(0, gt)));
    std::u32string to = unicode::decode(trim(line.substr(gt + 1)));
    if (from.size() != 1 || to.size() != 1)
      fail(fmt::format("normalization config: char_map line '{}' must map one character to one character", line));
    if (!map_replaced) {
      config.char_map.clear();
      map_replaced = true;
    }
    config.char_map.emplace_back(from[0], to[0]);
  }
  config.validate();
  return config;
}

NormalizationConfig load_normalization_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::runtime_error& e) {
    fail(e.what());
  }
  return parse_normalization_config(text);
}

Stoplist Stoplist::parse(std::string_view text, const NormalizationConfig& config) {
  Stoplist list;
  for (std::string_view raw : split_lines(text)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string form = normalize_form(line, config);
    if (!form.empty()) list.forms_.insert(std::move(form));
  }
  return list;
}

Stoplist Stoplist::load(const std::filesystem::path& path, const NormalizationConfig& config) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::runtime_error& e) {
    fail(fmt::format("stoplist: {}", e.what()));
  }
  return parse(text, config);
}

std::vector<std::string> tokenize(std::string_view raw, const NormalizationConfig& config) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (char32_t cp : unicode::decode(raw)) {
    bool in_word = unicode::is_letter(cp) || unicode::is_combining_mark(cp) ||
                   config.in_word_marks.find(cp) != std::u32string::npos ||
                   (!config.apostrophe_splits && unicode::is_apostrophe(cp));
    if (in_word) {
      unicode::append(current, cp);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::string normalize_form(std::string_view form, const NormalizationConfig& config) {
  std::string out;
  out.reserve(form.size());
  for (char32_t cp : unicode::decode(form)) {
    if (config.case_fold) cp = unicode::fold_case(cp);
    cp = map_char(config, cp);
    if (config.strip_diacritics) {
      auto base = unicode::strip_diacritic(cp);
      if (!base) continue;
      cp = map_char(config, *base);
    }
    unicode::append(out, cp);
  }
  return out;
}

std::vector<std::string> normalized_tokens(std::string_view raw, const NormalizationConfig& config,
                                           const Stoplist* stoplist) {
  std::vector<std::string> out;
  for (const std::string& token : tokenize(raw, config)) {
    std::string form = normalize_form(token, config);
    if (form.empty()) continue;
    if (stoplist != nullptr && stoplist->contains(form)) continue;
    out.push_back(std::move(form));
  }
  return out;
}

std::vector<WitnessMeta> parse_metadata(std::string_view csv_text) {
  std::vector<io::CsvRow> rows;
  try {
    rows = io::parse_csv(csv_text);
  } catch (const std::invalid_argument& e) {
    fail(fmt::format("malformed CSV: {}", e.what()));
  }
  if (rows.empty()) fail("malformed CSV: missing header");

  const io::CsvRow& header = rows.front();
  std::map<std::string, std::size_t> column;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::string name(trim(header[c]));
    if (!column.emplace(name, c).second) fail(fmt::format("malformed CSV: duplicate column '{}'", name));
  }
  if (!column.contains("id")) fail("malformed CSV: header has no 'id' column");

  std::vector<WitnessMeta> metas;
  std::map<std::string, std::size_t> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const io::CsvRow& row = rows[r];
    if (row.size() != header.size())
      fail(fmt::format("malformed CSV: row {} has {} fields, header has {}", r + 1, row.size(), header.size()));
    auto get = [&](const char* name) -> std::optional<std::string> {
      auto it = column.find(name);
      if (it == column.end()) return std::nullopt;
      std::string value(trim(row[it->second]));
      if (value.empty()) return std::nullopt;
      return value;
    };

    WitnessMeta meta;
    meta.id = get("id").value_or("");
    if (!is_valid_witness_id(meta.id))
      fail(fmt::format("invalid witness id '{}' on row {} (ids must be nonempty, without whitespace or ,;():)",
                       meta.id, r + 1));
    if (auto [it, inserted] = seen.emplace(meta.id, r + 1); !inserted)
      fail(fmt::format("duplicate id '{}' on rows {} and {}", meta.id, it->second, r + 1));
    meta.source = get("source").value_or("");
    meta.deaf_sigla = get("deaf");
    meta.ms_base = get("ms_base");
    meta.editor = get("ed");
    meta.place_wit = get("place_wit");
    meta.date_wit = get("date_wit");
    meta.place_text = get("place_text");
    meta.date_text = get("date_text");
    metas.push_back(std::move(meta));
  }
  if (metas.empty()) fail("empty corpus");
  return metas;
}

std::vector<Witness> load_corpus(const std::filesystem::path& text_dir,
                                 const std::filesystem::path& metadata_path,
                                 const NormalizationConfig& config, const Stoplist* stoplist) {
  config.validate();
  if (!std::filesystem::is_directory(text_dir))
    fail(fmt::format("input directory '{}' does not exist", text_dir.string()));

  std::string csv_text;
  try {
    csv_text = io::read_file(metadata_path);
  } catch (const std::runtime_error& e) {
    fail(fmt::format("metadata: {}", e.what()));
  }
  std::vector<WitnessMeta> metas = parse_metadata(csv_text);

  std::vector<std::string> missing;
  for (const auto& meta : metas)
    if (!std::filesystem::is_regular_file(text_dir / (meta.id + ".txt"))) missing.push_back(meta.id);
  if (!missing.empty())
    fail(fmt::format("missing text file(s) for id(s): {}", fmt::join(missing, ", ")));

  std::vector<Witness> witnesses(metas.size());
  parallel_for(metas.size(), [&](std::size_t i) {
    std::filesystem::path path = text_dir / (metas[i].id + ".txt");
    std::string raw;
    try {
      raw = io::read_file(path);
    } catch (const std::runtime_error& e) {
      fail(e.what());
    }
    if (auto bad = unicode::first_invalid_offset(raw))
      fail(fmt::format("{}: invalid UTF-8 at byte {}", path.string(), *bad));
    witnesses[i].meta = metas[i];
    witnesses[i].tokens = normalized_tokens(raw, config, stoplist);
  });
  return witnesses;
}

FilterResult filter_short(std::vector<Witness> witnesses, std::size_t min_tokens) {
  FilterResult result;
  for (Witness& w : witnesses) {
    if (w.tokens.size() >= min_tokens) {
      result.kept.push_back(std::move(w));
    } else {
      result.dropped.push_back(w.meta.id);
    }
  }
  if (result.kept.empty())
    fail(fmt::format("no witnesses remain after removing those under {} tokens", min_tokens));
  return result;
}

}  // namespace scriptometer
