// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/synthetic.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string_view>

#include <fmt/format.h>

#include "scriptometer/io.hpp"

namespace scriptometer {
namespace {

constexpr std::string_view kOnsets = "bcdfghlmnprst";
constexpr std::string_view kVowels = "aeiou";

// Distinct pseudo-words: bijective base-65 numbering over CV syllables.
std::string pseudo_word(std::size_t index) {
  const std::size_t base = kOnsets.size() * kVowels.size();
  std::string word;
  std::size_t i = index + 1;
  while (i > 0) {
    std::size_t digit = (i - 1) % base;
    word.insert(0, {kOnsets[digit / kVowels.size()], kVowels[digit % kVowels.size()]});
    i = (i - 1) / base;
  }
  return word;
}

// Engine output mapped by hand; std distributions are not portable.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
}

class ZipfSampler {
 public:
  explicit ZipfSampler(std::size_t n) : cumulative_(n) {
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) cumulative_[r] = total += 1.0 / static_cast<double>(r + 1);
    for (double& c : cumulative_) c /= total;
  }
  std::size_t operator()(std::mt19937_64& rng) const {
    double u = uniform01(rng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace

std::string dialect_name(std::size_t dialect) { return fmt::format("dialect_{}", dialect); }

SyntheticCorpus generate_dialect_corpus(const SyntheticCorpusSpec& spec) {
  if (spec.n_witnesses == 0 || spec.n_dialects == 0 || spec.dialect_forms == 0 || spec.shared_forms == 0)
    throw std::invalid_argument("synthetic corpus sizes must be positive");
  if (spec.min_tokens == 0 || spec.max_tokens < spec.min_tokens)
    throw std::invalid_argument("synthetic corpus token range is empty");
  if (!(spec.shared_fraction >= 0.0 && spec.shared_fraction <= 1.0))
    throw std::invalid_argument("shared_fraction must lie in [0, 1]");

  std::mt19937_64 rng(spec.seed);

  std::size_t next_word = 0;
  std::vector<std::string> shared(spec.shared_forms);
  for (auto& w : shared) w = pseudo_word(next_word++);
  std::vector<std::vector<std::string>> inventory(spec.n_dialects, std::vector<std::string>(spec.dialect_forms));
  for (auto& inv : inventory)
    for (auto& w : inv) w = pseudo_word(next_word++);

  std::vector<std::size_t> slots(spec.n_witnesses);
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i % spec.n_dialects;
  for (std::size_t i = slots.size(); i > 1; --i) std::swap(slots[i - 1], slots[uniform_below(rng, i)]);

  ZipfSampler shared_draw(spec.shared_forms);
  ZipfSampler dialect_draw(spec.dialect_forms);

  SyntheticCorpus corpus;
  for (std::size_t w = 0; w < spec.n_witnesses; ++w) {
    std::size_t d = slots[w];
    std::size_t length = spec.min_tokens + uniform_below(rng, spec.max_tokens - spec.min_tokens + 1);

    std::string text;
    for (std::size_t t = 0; t < length; ++t) {
      const std::string& form = uniform01(rng) < spec.shared_fraction ? shared[shared_draw(rng)]
                                                                      : inventory[d][dialect_draw(rng)];
      bool line_start = t % 12 == 0;
      if (t > 0) text += line_start ? "\n" : " ";
      if (line_start) {
        text.push_back(static_cast<char>(form[0] - 'a' + 'A'));
        text.append(form, 1);
      } else {
        text += form;
      }
      if (t % 12 == 5) text.push_back(',');
      if (t % 12 == 11) text.push_back('.');
    }
    text.push_back('\n');

    WitnessMeta meta;
    meta.id = fmt::format("W{:02}", w + 1);
    meta.source = fmt::format("synthetic witness {}", w + 1);
    meta.place_wit = dialect_name(d);
    corpus.metas.push_back(std::move(meta));
    corpus.texts.push_back(std::move(text));
    corpus.dialect.push_back(d);
  }
  return corpus;
}

void write_corpus(const SyntheticCorpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::string csv = "id,source,deaf,ms_base,ed,place_wit,date_wit,place_text,date_text\n";
  for (std::size_t i = 0; i < corpus.metas.size(); ++i) {
    const WitnessMeta& m = corpus.metas[i];
    csv += io::csv_line({m.id, m.source, "", "", "", m.place_wit.value_or(""), "", "", ""});
    io::write_file_atomic(dir / (m.id + ".txt"), corpus.texts[i]);
  }
  io::write_file_atomic(dir / "metadata.csv", csv);
}

}  // namespace scriptometer
