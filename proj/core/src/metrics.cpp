// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/metrics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "numeric.hpp"
#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"
#include "scriptometer/parallel.hpp"

namespace scriptometer {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Module::metrics, message); }

}  // namespace

std::string_view metric_name(Metric m) noexcept {
  switch (m) {
    case Metric::manhattan: return "manhattan";
    case Metric::euclidean: return "euclidean";
    case Metric::squared_euclidean: return "squared-euclidean";
  }
  return "unknown";
}

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  if (name == "manhattan") return Metric::manhattan;
  if (name == "euclidean") return Metric::euclidean;
  if (name == "squared-euclidean" || name == "squared_euclidean") return Metric::squared_euclidean;
  return std::nullopt;
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> ids, std::vector<double> values, Metric metric)
    : ids_(std::move(ids)), values_(std::move(values)), metric_(metric) {
  std::size_t n = ids_.size();
  if (values_.size() != n * n) fail(fmt::format("distance matrix has {} cells, expected {}", values_.size(), n * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (values_[i * n + i] != 0.0) fail(fmt::format("nonzero diagonal entry for '{}'", ids_[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      double a = values_[i * n + j];
      if (!std::isfinite(a) || a < 0.0)
        fail(fmt::format("distance between '{}' and '{}' is not a finite nonnegative number", ids_[i], ids_[j]));
      if (a != values_[j * n + i]) fail(fmt::format("asymmetric distance between '{}' and '{}'", ids_[i], ids_[j]));
    }
  }
}

double pair_distance(std::span<const double> x, std::span<const double> y, Metric metric) {
  if (x.size() != y.size()) fail(fmt::format("vectors of length {} and {} cannot be compared", x.size(), y.size()));
  detail::CompensatedSum acc;
  if (metric == Metric::manhattan) {
    for (std::size_t f = 0; f < x.size(); ++f) acc.add(std::fabs(x[f] - y[f]));
    return acc.value();
  }
  for (std::size_t f = 0; f < x.size(); ++f) {
    double diff = x[f] - y[f];
    acc.add(diff * diff);
  }
  return metric == Metric::euclidean ? std::sqrt(acc.value()) : acc.value();
}

DistanceMatrix distance_matrix(const RelFreqMatrix& m, Metric metric) {
  std::size_t n = m.rows();
  if (n < 2) fail(fmt::format("need at least 2 witnesses for a distance matrix, got {}", n));

  // Pair p enumerates (i, j), i < j, row by row.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<double> values(n * n, 0.0);
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [i, j] = pairs[p];
    double d = pair_distance(m.row(i), m.row(j), metric);
    values[i * n + j] = d;
    values[j * n + i] = d;
  });
  return DistanceMatrix(m.witness_ids(), std::move(values), metric);
}

std::string distances_csv(const DistanceMatrix& d) {
  std::vector<std::string> header{"id"};
  header.insert(header.end(), d.ids().begin(), d.ids().end());
  std::string out = io::csv_line(header);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<std::string> fields{d.ids()[i]};
    for (std::size_t j = 0; j < d.size(); ++j) fields.push_back(io::format_full(d(i, j)));
    out += io::csv_line(fields);
  }
  return out;
}

}  // namespace scriptometer
