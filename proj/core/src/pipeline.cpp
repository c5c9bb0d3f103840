// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/pipeline.hpp"

#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "json_util.hpp"
#include "scriptometer/corpus.hpp"
#include "scriptometer/error.hpp"
#include "scriptometer/hierclust.hpp"
#include "scriptometer/io.hpp"
#include "scriptometer/stability.hpp"
#include "scriptometer/svg.hpp"
#include "scriptometer/unicode.hpp"

namespace scriptometer {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw Error(Module::cli, message); }

std::string utf8_char(char32_t cp) {
  std::string s;
  unicode::append(s, cp);
  return s;
}

json normalization_json(const NormalizationConfig& n) {
  json map = json::array();
  for (const auto& [from, to] : n.char_map) map.push_back(utf8_char(from) + ">" + utf8_char(to));
  json j;
  j["char_map"] = map;
  j["case_fold"] = n.case_fold;
  j["strip_diacritics"] = n.strip_diacritics;
  j["apostrophe_splits"] = n.apostrophe_splits;
  j["in_word_marks"] = unicode::encode(n.in_word_marks);
  return j;
}

json config_json(const RunConfig& c, const std::filesystem::path& metadata, const NormalizationConfig& norm) {
  json j;
  j["input"] = c.input_dir.string();
  j["metadata"] = metadata.string();
  j["stoplist"] = c.stoplist_path ? json(c.stoplist_path->string()) : json(nullptr);
  j["norm"] = c.normalization_path ? json(c.normalization_path->string()) : json(nullptr);
  j["normalization"] = normalization_json(norm);
  j["mfw"] = c.mfw;
  j["min_tokens"] = c.min_tokens;
  j["metric"] = metric_name(c.metric);
  j["square_distances"] = c.square_distances;
  j["k"] = c.k;
  j["profile_mode"] = profile_mode_name(c.profile_mode);
  j["top"] = c.top;
  j["sweep"] = c.sweep_levels ? json(*c.sweep_levels) : json(nullptr);
  j["members"] = c.profile_members;
  j["out"] = c.out_dir.string();
  return j;
}

class OutputDir {
 public:
  OutputDir(std::filesystem::path dir, RunResult& result) : dir_(std::move(dir)), result_(result) {}

  void write(const std::string& name, const std::string& contents) {
    try {
      io::write_file_atomic(dir_ / name, contents);
    } catch (const std::runtime_error& e) {
      fail(e.what());
    }
    result_.files.push_back(name);
  }

 private:
  std::filesystem::path dir_;
  RunResult& result_;
};

}  // namespace

void RunConfig::validate() const {
  if (input_dir.empty()) fail("no input directory given");
  if (out_dir.empty()) fail("no output directory given");
  if (mfw == 0) fail("--mfw must be at least 1");
  if (k == 0) fail("--k must be at least 1");
  if (top == 0) fail("--top must be at least 1");
  if (sweep_levels) {
    if (sweep_levels->empty()) fail("--sweep needs at least one level");
    for (std::size_t level : *sweep_levels)
      if (level == 0) fail("--sweep levels must be at least 1");
  }
}

RunResult run_pipeline(const RunConfig& config) {
  config.validate();
  RunResult result;

  NormalizationConfig norm =
      config.normalization_path ? load_normalization_config(*config.normalization_path) : NormalizationConfig{};
  std::optional<Stoplist> stoplist;
  if (config.stoplist_path) stoplist = Stoplist::load(*config.stoplist_path, norm);
  std::filesystem::path metadata =
      config.metadata_path.empty() ? config.input_dir / "metadata.csv" : config.metadata_path;

  std::vector<Witness> witnesses =
      load_corpus(config.input_dir, metadata, norm, stoplist ? &*stoplist : nullptr);
  FilterResult filtered = filter_short(std::move(witnesses), config.min_tokens);
  result.dropped = filtered.dropped;
  for (const std::string& id : filtered.dropped)
    result.warnings.push_back(fmt::format("dropped witness '{}' (fewer than {} tokens)", id, config.min_tokens));

  DocTermMatrix full = build_dtm(filtered.kept);
  result.stats = corpus_stats(full);
  DocTermMatrix selected = select_mfw(full, config.mfw);
  RelFreqMatrix rel = relative_freq(selected);
  DistanceMatrix dist = distance_matrix(rel, config.metric);
  Dendrogram dend = ward_cluster(dist, WardOptions{config.square_distances});
  result.agglomerative_coefficient = agglomerative_coefficient(dend);
  ClusterAssignment groups = cut_tree(dend, config.k);

  std::vector<std::size_t> inversions = dend.inversions();
  if (!inversions.empty())
    result.warnings.push_back(fmt::format("dendrogram has {} inversion(s)", inversions.size()));

  std::vector<GroupProfile> profiles;
  try {
    for (std::size_t c = 0; c < groups.k(); ++c)
      profiles.push_back(group_profile(rel, groups, c, config.profile_mode));
  } catch (const Error& e) {
    profiles.clear();
    result.warnings.push_back(fmt::format("profiles skipped: {}", e.what()));
  }
  std::optional<GroupProfile> member_prof;
  if (!config.profile_members.empty())
    member_prof = member_profile(rel, config.profile_members, config.profile_mode);

  std::optional<StabilityReport> sweep;
  if (config.sweep_levels)
    sweep = mfw_sweep(full, *config.sweep_levels, config.k,
                      SweepOptions{config.metric, WardOptions{config.square_distances}});

  std::optional<std::string> newick;
  try {
    newick = to_newick(dend) + "\n";
  } catch (const InversionError& e) {
    result.warnings.push_back(fmt::format("dendrogram.nwk skipped: {}", e.what()));
  }

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec || !std::filesystem::is_directory(config.out_dir))
    fail(fmt::format("cannot create output directory '{}'", config.out_dir.string()));
  OutputDir out(config.out_dir, result);

  out.write("dtm.csv", dtm_csv(selected));
  out.write("relfreq.csv", relfreq_csv(rel));
  out.write("stats.json", stats_json(result.stats));
  out.write("distances.csv", distances_csv(dist));
  if (newick) out.write("dendrogram.nwk", *newick);
  out.write("merges.csv", merges_csv(dend));
  out.write("groups.csv", groups_csv(groups));
  for (const GroupProfile& p : profiles) {
    out.write(fmt::format("profile_{}.csv", p.cluster_index), profile_csv(p));
    out.write(fmt::format("profile_{}_display.csv", p.cluster_index), profile_display_csv(p, config.top));
  }
  if (member_prof) {
    out.write("profile_members.csv", profile_csv(*member_prof));
    out.write("profile_members_display.csv", profile_display_csv(*member_prof, config.top));
  }
  if (sweep) {
    out.write("stability.csv", stability_csv(*sweep));
    out.write("stability_ari.csv", stability_ari_csv(*sweep));
  }
  SvgLayout layout;
  layout.title = fmt::format("Ward's method, {} distance, {} MFW, relative frequencies", metric_name(config.metric),
                             config.mfw);
  out.write("dendrogram.svg", render_svg(dend, groups, layout));

  json summary;
  summary["config"] = config_json(config, metadata, norm);
  summary["stats"] = detail::to_json(result.stats);
  summary["witnesses"] = selected.witness_ids();
  summary["dropped_witnesses"] = result.dropped;
  summary["n_forms_selected"] = selected.cols();
  summary["agglomerative_coefficient"] = result.agglomerative_coefficient;
  summary["inversions"] = inversions;
  json sizes = json::array();
  for (std::size_t c = 0; c < groups.k(); ++c) sizes.push_back(groups.cluster_size(c));
  summary["cluster_sizes"] = sizes;
  if (sweep) {
    summary["sweep"] = {{"levels", sweep->mfw_levels}, {"ac", sweep->ac_by_level}, {"ari", sweep->ari_matrix}};
  }
  summary["warnings"] = result.warnings;
  json files = result.files;
  files.push_back("summary.json");
  summary["files"] = files;
  out.write("summary.json", summary.dump(2) + "\n");
  return result;
}

}  // namespace scriptometer
