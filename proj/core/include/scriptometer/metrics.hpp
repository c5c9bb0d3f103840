// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scriptometer/matrix.hpp"

namespace scriptometer {

enum class Metric { manhattan, euclidean, squared_euclidean };

std::string_view metric_name(Metric m) noexcept;
/// Accepts "manhattan", "euclidean", "squared-euclidean" and
/// "squared_euclidean".
std::optional<Metric> parse_metric(std::string_view name) noexcept;

/// Symmetric dissimilarity matrix with a zero diagonal, row-major.
class DistanceMatrix {
 public:
  /// Throws Error(metrics) unless `values` is n x n, finite, nonnegative,
  /// exactly symmetric, with an exactly zero diagonal.
  DistanceMatrix(std::vector<std::string> ids, std::vector<double> values, Metric metric);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<double>& values() const noexcept { return values_; }
  Metric metric() const noexcept { return metric_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }

 private:
  std::vector<std::string> ids_;
  std::vector<double> values_;
  Metric metric_;
};

/// Distance between two equal-length vectors, summed in index order with
/// compensated accumulation.
double pair_distance(std::span<const double> x, std::span<const double> y, Metric metric);

/// All pairwise distances between rows. Each unordered pair is computed once
/// and mirrored, so symmetry is exact. Needs at least two rows.
DistanceMatrix distance_matrix(const RelFreqMatrix& m, Metric metric);

std::string distances_csv(const DistanceMatrix& d);

}  // namespace scriptometer
