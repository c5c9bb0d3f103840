// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scriptometer/corpus.hpp"
#include "scriptometer/hierclust.hpp"
#include "scriptometer/metrics.hpp"

namespace scriptometer {

/// Adjusted Rand index between two partitions of the same ids (same order).
/// Computed from exact integer pair counts, so it is exactly symmetric.
/// Degenerate cases where the expected and maximal index coincide return 1
/// if the partitions agree and 0 otherwise.
double adjusted_rand(const ClusterAssignment& a, const ClusterAssignment& b);

struct StabilityReport {
  std::vector<std::size_t> mfw_levels;
  std::vector<double> ac_by_level;
  std::vector<ClusterAssignment> cuts;  // one k-cut per level
  std::vector<double> ari_matrix;       // levels x levels, row-major
  std::size_t k = 0;

  double ari(std::size_t i, std::size_t j) const { return ari_matrix[i * mfw_levels.size() + j]; }
};

struct SweepOptions {
  Metric metric = Metric::manhattan;
  WardOptions ward;
};

/// For each level: select_mfw, relative_freq, distance_matrix, ward_cluster,
/// agglomerative coefficient and k-cut; then the pairwise ARI of the cuts.
StabilityReport mfw_sweep(const std::vector<Witness>& witnesses, const std::vector<std::size_t>& levels,
                          std::size_t k, SweepOptions options = {});
StabilityReport mfw_sweep(const DocTermMatrix& dtm, const std::vector<std::size_t>& levels, std::size_t k,
                          SweepOptions options = {});

/// `level,ac`
std::string stability_csv(const StabilityReport& report);
/// Square ARI matrix with a `level` header row and column.
std::string stability_ari_csv(const StabilityReport& report);

}  // namespace scriptometer
