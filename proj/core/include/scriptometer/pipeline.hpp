// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scriptometer/matrix.hpp"
#include "scriptometer/metrics.hpp"
#include "scriptometer/profiles.hpp"

namespace scriptometer {

/// Defaults reproduce the reference configuration: Ward, Manhattan, 2000 MFW,
/// relative frequencies, witnesses under 2000 tokens removed.
struct RunConfig {
  std::filesystem::path input_dir;
  /// Empty means `<input_dir>/metadata.csv`.
  std::filesystem::path metadata_path;
  std::optional<std::filesystem::path> stoplist_path;
  std::optional<std::filesystem::path> normalization_path;
  std::size_t mfw = 2000;
  std::size_t min_tokens = 2000;
  Metric metric = Metric::manhattan;
  bool square_distances = false;
  std::size_t k = 2;
  ProfileMode profile_mode = ProfileMode::lebart;
  std::size_t top = 25;
  std::optional<std::vector<std::size_t>> sweep_levels;
  /// Extra profile of exactly these witnesses against the rest
  /// (written as profile_members.csv); empty to skip.
  std::vector<std::string> profile_members;
  std::filesystem::path out_dir;

  /// Throws Error(cli) on zero counts or missing paths.
  void validate() const;
};

inline const std::vector<std::size_t> kDefaultSweepLevels{600, 1000, 1500, 2000, 2500, 3000};

struct RunResult {
  std::vector<std::string> files;  // written, in write order
  std::vector<std::string> warnings;
  std::vector<std::string> dropped;
  CorpusStats stats;
  double agglomerative_coefficient = 0.0;
};

/// load -> filter_short -> build_dtm -> select_mfw -> relative_freq ->
/// distance_matrix -> ward_cluster -> AC -> cut_tree -> profiles
/// (-> mfw_sweep), writing every export plus summary.json and
/// dendrogram.svg into out_dir. Identical inputs give byte-identical files.
/// Profiles that cannot be computed (e.g. k = 1) and a Newick export blocked
/// by an inversion are skipped with a warning; other errors propagate.
RunResult run_pipeline(const RunConfig& config);

}  // namespace scriptometer
