// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "json_util.hpp"
#include "numeric.hpp"
#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"
#include "scriptometer/parallel.hpp"

namespace scriptometer {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Module::matrix, message); }

// Column order for MFW ranking: descending frequency, then ascending form.
std::vector<std::size_t> ranked_columns(std::span<const Count> freq, const std::vector<std::string>& forms) {
  std::vector<std::size_t> order(forms.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (freq[a] != freq[b]) return freq[a] > freq[b];
    return forms[a] < forms[b];
  });
  return order;
}

double geometric_mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  detail::CompensatedSum logs;
  for (double v : values) {
    if (v <= 0.0) return 0.0;
    logs.add(std::log(v));
  }
  return std::exp(logs.value() / static_cast<double>(values.size()));
}

}  // namespace

DocTermMatrix::DocTermMatrix(std::vector<std::string> witness_ids, std::vector<std::string> forms,
                             std::vector<Count> counts, std::vector<Count> witness_totals)
    : witness_ids_(std::move(witness_ids)),
      forms_(std::move(forms)),
      counts_(std::move(counts)),
      witness_totals_(std::move(witness_totals)) {
  if (counts_.size() != witness_ids_.size() * forms_.size())
    fail(fmt::format("count matrix has {} cells, expected {} x {}", counts_.size(), witness_ids_.size(),
                     forms_.size()));
  if (witness_totals_.size() != witness_ids_.size())
    fail(fmt::format("{} witness totals for {} witnesses", witness_totals_.size(), witness_ids_.size()));
  for (std::size_t r = 0; r < rows(); ++r) {
    auto cells = row(r);
    Count sum = std::accumulate(cells.begin(), cells.end(), Count{0});
    if (sum > witness_totals_[r])
      fail(fmt::format("witness '{}' has {} counted tokens but a total of {}", witness_ids_[r], sum,
                       witness_totals_[r]));
  }
}

std::vector<Count> DocTermMatrix::form_frequencies() const {
  std::vector<Count> freq(cols(), 0);
  for (std::size_t r = 0; r < rows(); ++r) {
    auto cells = row(r);
    for (std::size_t c = 0; c < cols(); ++c) freq[c] += cells[c];
  }
  return freq;
}

RelFreqMatrix::RelFreqMatrix(std::vector<std::string> witness_ids, std::vector<std::string> forms,
                             std::vector<double> values)
    : witness_ids_(std::move(witness_ids)), forms_(std::move(forms)), values_(std::move(values)) {
  if (values_.size() != witness_ids_.size() * forms_.size())
    fail(fmt::format("frequency matrix has {} cells, expected {} x {}", values_.size(), witness_ids_.size(),
                     forms_.size()));
  for (double v : values_)
    if (!std::isfinite(v)) fail("frequency matrix contains a non-finite value");
}

DocTermMatrix build_dtm(const std::vector<Witness>& witnesses) {
  if (witnesses.empty()) fail("cannot build a document-term matrix from an empty witness list");

  std::vector<std::unordered_map<std::string, Count>> local(witnesses.size());
  parallel_for(witnesses.size(), [&](std::size_t w) {
    for (const std::string& token : witnesses[w].tokens) ++local[w][token];
  });

  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> forms;
  for (const auto& counts : local) {
    for (const auto& [form, _] : counts) {
      if (index.emplace(form, forms.size()).second) forms.push_back(form);
    }
  }
  if (forms.empty()) fail("no tokens in any witness");

  std::vector<Count> freq(forms.size(), 0);
  for (const auto& counts : local)
    for (const auto& [form, n] : counts) freq[index.at(form)] += n;
  std::vector<std::size_t> order = ranked_columns(freq, forms);

  std::vector<std::size_t> column(forms.size());
  std::vector<std::string> sorted_forms(forms.size());
  for (std::size_t c = 0; c < order.size(); ++c) {
    column[order[c]] = c;
    sorted_forms[c] = forms[order[c]];
  }

  std::size_t n_cols = forms.size();
  std::vector<Count> cells(witnesses.size() * n_cols, 0);
  std::vector<Count> totals(witnesses.size());
  std::vector<std::string> ids(witnesses.size());
  for (std::size_t w = 0; w < witnesses.size(); ++w) {
    ids[w] = witnesses[w].meta.id;
    totals[w] = witnesses[w].tokens.size();
    for (const auto& [form, n] : local[w]) cells[w * n_cols + column[index.at(form)]] = n;
  }
  return DocTermMatrix(std::move(ids), std::move(sorted_forms), std::move(cells), std::move(totals));
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) return 0.0;
  double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  auto lo = static_cast<std::size_t>(std::floor(h));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

CorpusStats corpus_stats(const DocTermMatrix& dtm) {
  if (dtm.rows() == 0) fail("corpus statistics need at least one witness");

  CorpusStats s;
  s.n_witnesses = dtm.rows();
  const auto& totals = dtm.witness_totals();
  s.total_tokens = std::accumulate(totals.begin(), totals.end(), Count{0});
  s.witness_tokens_min = *std::min_element(totals.begin(), totals.end());
  s.witness_tokens_max = *std::max_element(totals.begin(), totals.end());

  std::vector<double> witness_sizes(totals.begin(), totals.end());
  std::sort(witness_sizes.begin(), witness_sizes.end());
  s.witness_tokens_geometric_mean = geometric_mean(witness_sizes);
  s.witness_tokens_median = quantile_sorted(witness_sizes, 0.5);

  std::vector<double> form_freq;
  for (Count f : dtm.form_frequencies()) {
    if (f == 0) continue;
    if (f == 1) ++s.n_hapaxes;
    form_freq.push_back(static_cast<double>(f));
  }
  std::sort(form_freq.begin(), form_freq.end());
  s.n_forms = form_freq.size();
  s.form_freq_geometric_mean = geometric_mean(form_freq);
  s.form_freq_median = quantile_sorted(form_freq, 0.5);
  s.form_freq_q3 = quantile_sorted(form_freq, 0.75);
  return s;
}

DocTermMatrix select_mfw(const DocTermMatrix& dtm, std::size_t n) {
  if (n == 0) fail("MFW count must be at least 1");
  std::vector<Count> freq = dtm.form_frequencies();
  std::vector<std::size_t> order = ranked_columns(freq, dtm.forms());
  order.resize(std::min(n, order.size()));

  std::vector<std::string> forms;
  forms.reserve(order.size());
  for (std::size_t c : order) forms.push_back(dtm.forms()[c]);
  std::vector<Count> cells(dtm.rows() * order.size());
  for (std::size_t r = 0; r < dtm.rows(); ++r)
    for (std::size_t k = 0; k < order.size(); ++k) cells[r * order.size() + k] = dtm.at(r, order[k]);
  return DocTermMatrix(dtm.witness_ids(), std::move(forms), std::move(cells), dtm.witness_totals());
}

RelFreqMatrix relative_freq(const DocTermMatrix& dtm) {
  std::vector<double> values(dtm.rows() * dtm.cols());
  for (std::size_t r = 0; r < dtm.rows(); ++r) {
    Count total = dtm.witness_totals()[r];
    if (total == 0) fail(fmt::format("witness '{}' has no tokens; relative frequencies undefined", dtm.witness_ids()[r]));
    auto denom = static_cast<double>(total);
    for (std::size_t c = 0; c < dtm.cols(); ++c)
      values[r * dtm.cols() + c] = static_cast<double>(dtm.at(r, c)) / denom;
  }
  return RelFreqMatrix(dtm.witness_ids(), dtm.forms(), std::move(values));
}

std::string dtm_csv(const DocTermMatrix& dtm) {
  std::vector<std::string> header{"id"};
  header.insert(header.end(), dtm.forms().begin(), dtm.forms().end());
  std::string out = io::csv_line(header);
  for (std::size_t r = 0; r < dtm.rows(); ++r) {
    std::vector<std::string> fields{dtm.witness_ids()[r]};
    for (Count c : dtm.row(r)) fields.push_back(std::to_string(c));
    out += io::csv_line(fields);
  }
  return out;
}

std::string relfreq_csv(const RelFreqMatrix& m) {
  std::vector<std::string> header{"id"};
  header.insert(header.end(), m.forms().begin(), m.forms().end());
  std::string out = io::csv_line(header);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> fields{m.witness_ids()[r]};
    for (double v : m.row(r)) fields.push_back(io::format_full(v));
    out += io::csv_line(fields);
  }
  return out;
}

namespace detail {

nlohmann::ordered_json to_json(const CorpusStats& s) {
  nlohmann::ordered_json j;
  j["n_witnesses"] = s.n_witnesses;
  j["total_tokens"] = s.total_tokens;
  j["n_forms"] = s.n_forms;
  j["n_hapaxes"] = s.n_hapaxes;
  j["form_freq_geometric_mean"] = s.form_freq_geometric_mean;
  j["form_freq_median"] = s.form_freq_median;
  j["form_freq_q3"] = s.form_freq_q3;
  j["witness_tokens_geometric_mean"] = s.witness_tokens_geometric_mean;
  j["witness_tokens_median"] = s.witness_tokens_median;
  j["witness_tokens_min"] = s.witness_tokens_min;
  j["witness_tokens_max"] = s.witness_tokens_max;
  return j;
}

}  // namespace detail

std::string stats_json(const CorpusStats& stats) { return detail::to_json(stats).dump(2) + "\n"; }

}  // namespace scriptometer
