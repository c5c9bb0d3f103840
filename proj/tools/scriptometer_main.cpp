// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

// scriptometer: cluster text witnesses by most-frequent-word profiles.
//
//   scriptometer --input corpus/ --out results/
//   scriptometer --input corpus/ --mfw 100 --min-tokens 10 --sweep 50,100,200 --out results/

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scriptometer/error.hpp"
#include "scriptometer/parallel.hpp"
#include "scriptometer/pipeline.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace scriptometer;

  CLI::App app{"Hierarchical clustering of text witnesses by most-frequent-word profiles"};
  app.set_version_flag("--version", "scriptometer 0.1.0");

  RunConfig config;
  std::string input, metadata, stoplist, norm, out;
  std::string metric = "manhattan";
  std::string mode = "lebart";
  std::string sweep, members;

  app.add_option("--input", input, "Directory with one <id>.txt per witness")->required();
  app.add_option("--metadata", metadata, "Metadata CSV (default: <input>/metadata.csv)");
  app.add_option("--stoplist", stoplist, "Forms to remove, one per line");
  app.add_option("--norm", norm, "Normalization config file");
  app.add_option("--mfw", config.mfw, "Number of most frequent words kept")->capture_default_str();
  app.add_option("--min-tokens", config.min_tokens, "Drop witnesses with fewer tokens")->capture_default_str();
  app.add_option("--metric", metric, "Distance between witnesses")
      ->check(CLI::IsMember({"manhattan", "euclidean", "squared-euclidean"}))
      ->capture_default_str();
  app.add_flag("--square-distances", config.square_distances,
               "Square dissimilarities before Ward and report square-rooted heights");
  app.add_option("--k", config.k, "Number of clusters cut from the tree")->capture_default_str();
  app.add_option("--profile-mode", mode, "Values-test variant")
      ->check(CLI::IsMember({"lebart", "footnote"}))
      ->capture_default_str();
  app.add_option("--top", config.top, "Rows per sign in the display profiles")->capture_default_str();
  app.add_option("--sweep", sweep, "Comma-separated MFW levels for the stability sweep (e.g. 600,1000,1500)");
  app.add_option("--members", members, "Comma-separated witness ids for an extra profile against the rest");
  app.add_option("--out", out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  if (std::size_t threads = parse_thread_count(std::getenv("SCRIPTOMETER_THREADS")); threads > 0)
    set_max_threads(threads);

  config.input_dir = input;
  config.metadata_path = metadata;
  if (!stoplist.empty()) config.stoplist_path = stoplist;
  if (!norm.empty()) config.normalization_path = norm;
  config.metric = *parse_metric(metric);
  config.profile_mode = *parse_profile_mode(mode);
  config.out_dir = out;
  config.profile_members = split_commas(members);
  if (!sweep.empty()) {
    std::vector<std::size_t> levels;
    for (const std::string& part : split_commas(sweep)) {
      try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        levels.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        std::cerr << "error: cli: --sweep: '" << part << "' is not a count\n";
        return 2;
      }
    }
    config.sweep_levels = levels;
  }

  try {
    RunResult result = run_pipeline(config);
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "witnesses: " << result.stats.n_witnesses << " (dropped " << result.dropped.size() << ")\n"
              << "tokens: " << result.stats.total_tokens << ", forms: " << result.stats.n_forms << "\n"
              << "agglomerative coefficient: " << result.agglomerative_coefficient << "\n"
              << "wrote " << result.files.size() << " files to " << config.out_dir.string() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
