// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scriptometer/corpus.hpp"

namespace scriptometer {

using Count = std::uint64_t;

/// Witnesses x forms count matrix, row-major. witness_totals holds each
/// witness's full token count and is never reduced by form selection, so it
/// stays the denominator for relative frequencies.
class DocTermMatrix {
 public:
  DocTermMatrix() = default;
  /// Validates shapes and that every row sum is at most its total.
  DocTermMatrix(std::vector<std::string> witness_ids, std::vector<std::string> forms,
                std::vector<Count> counts, std::vector<Count> witness_totals);

  std::size_t rows() const noexcept { return witness_ids_.size(); }
  std::size_t cols() const noexcept { return forms_.size(); }

  const std::vector<std::string>& witness_ids() const noexcept { return witness_ids_; }
  const std::vector<std::string>& forms() const noexcept { return forms_; }
  const std::vector<Count>& witness_totals() const noexcept { return witness_totals_; }
  const std::vector<Count>& counts() const noexcept { return counts_; }

  Count at(std::size_t row, std::size_t col) const { return counts_[row * cols() + col]; }
  std::span<const Count> row(std::size_t r) const { return {counts_.data() + r * cols(), cols()}; }

  /// Corpus-wide frequency of each form (column sums).
  std::vector<Count> form_frequencies() const;

 private:
  std::vector<std::string> witness_ids_;
  std::vector<std::string> forms_;
  std::vector<Count> counts_;
  std::vector<Count> witness_totals_;
};

/// Relative frequencies, values[w][f] = counts[w][f] / witness_totals[w].
class RelFreqMatrix {
 public:
  RelFreqMatrix() = default;
  RelFreqMatrix(std::vector<std::string> witness_ids, std::vector<std::string> forms,
                std::vector<double> values);

  std::size_t rows() const noexcept { return witness_ids_.size(); }
  std::size_t cols() const noexcept { return forms_.size(); }
  const std::vector<std::string>& witness_ids() const noexcept { return witness_ids_; }
  const std::vector<std::string>& forms() const noexcept { return forms_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
  std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols(), cols()}; }

 private:
  std::vector<std::string> witness_ids_;
  std::vector<std::string> forms_;
  std::vector<double> values_;
};

struct CorpusStats {
  std::size_t n_witnesses = 0;
  Count total_tokens = 0;
  std::size_t n_forms = 0;
  std::size_t n_hapaxes = 0;
  double form_freq_geometric_mean = 0;
  double form_freq_median = 0;
  double form_freq_q3 = 0;
  double witness_tokens_geometric_mean = 0;
  double witness_tokens_median = 0;
  Count witness_tokens_min = 0;
  Count witness_tokens_max = 0;
};

/// Counts every form of every witness. Forms are ordered by descending
/// corpus frequency, then ascending byte-wise lexicographic order.
DocTermMatrix build_dtm(const std::vector<Witness>& witnesses);

/// Hapaxes, geometric means, and type-7 (linear interpolation) quantiles over
/// per-form corpus frequencies and per-witness totals. Forms whose corpus
/// frequency is zero are ignored.
CorpusStats corpus_stats(const DocTermMatrix& dtm);

/// Keeps the n most frequent forms (ties by ascending form). witness_totals
/// are carried over unchanged.
DocTermMatrix select_mfw(const DocTermMatrix& dtm, std::size_t n);

RelFreqMatrix relative_freq(const DocTermMatrix& dtm);

/// Type-7 quantile of already sorted values, p in [0,1].
double quantile_sorted(std::span<const double> sorted, double p);

std::string dtm_csv(const DocTermMatrix& dtm);
std::string relfreq_csv(const RelFreqMatrix& m);
std::string stats_json(const CorpusStats& stats);

}  // namespace scriptometer
