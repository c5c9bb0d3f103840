// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/stability.hpp"

#include <map>
#include <optional>

#include <fmt/format.h>

#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"
#include "scriptometer/matrix.hpp"
#include "scriptometer/parallel.hpp"

namespace scriptometer {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Module::stability, message); }

__extension__ typedef __int128 Wide;

Wide pairs(Wide n) { return n * (n - 1) / 2; }

}  // namespace

double adjusted_rand(const ClusterAssignment& a, const ClusterAssignment& b) {
  if (a.ids() != b.ids()) fail("adjusted Rand index needs both partitions over the same ids in the same order");

  std::map<std::pair<std::size_t, std::size_t>, Wide> joint;
  std::vector<Wide> row(a.k(), 0), col(b.k(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ++joint[{a.labels()[i], b.labels()[i]}];
    ++row[a.labels()[i]];
    ++col[b.labels()[i]];
  }

  Wide index = 0, sum_a = 0, sum_b = 0;
  for (const auto& [_, n] : joint) index += pairs(n);
  for (Wide n : row) sum_a += pairs(n);
  for (Wide n : col) sum_b += pairs(n);
  Wide total = pairs(static_cast<Wide>(a.size()));

  // ARI = (index - sa*sb/M) / ((sa+sb)/2 - sa*sb/M), scaled by 2M.
  Wide numerator = 2 * (index * total - sum_a * sum_b);
  Wide denominator = total * (sum_a + sum_b) - 2 * sum_a * sum_b;
  if (denominator == 0) return 2 * index == sum_a + sum_b ? 1.0 : 0.0;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

StabilityReport mfw_sweep(const std::vector<Witness>& witnesses, const std::vector<std::size_t>& levels,
                          std::size_t k, SweepOptions options) {
  return mfw_sweep(build_dtm(witnesses), levels, k, options);
}

StabilityReport mfw_sweep(const DocTermMatrix& dtm, const std::vector<std::size_t>& levels, std::size_t k,
                          SweepOptions options) {
  if (levels.empty()) fail("MFW sweep needs at least one level");
  for (std::size_t level : levels)
    if (level == 0) fail("MFW levels must be at least 1");

  const std::size_t L = levels.size();
  std::vector<double> ac(L);
  std::vector<std::optional<ClusterAssignment>> cuts(L);
  parallel_for(L, [&](std::size_t i) {
    RelFreqMatrix rel = relative_freq(select_mfw(dtm, levels[i]));
    Dendrogram dend = ward_cluster(distance_matrix(rel, options.metric), options.ward);
    ac[i] = agglomerative_coefficient(dend);
    cuts[i] = cut_tree(dend, k);
  });

  StabilityReport report;
  report.mfw_levels = levels;
  report.ac_by_level = std::move(ac);
  report.k = k;
  for (auto& c : cuts) report.cuts.push_back(std::move(*c));
  report.ari_matrix.assign(L * L, 1.0);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      double v = adjusted_rand(report.cuts[i], report.cuts[j]);
      report.ari_matrix[i * L + j] = v;
      report.ari_matrix[j * L + i] = v;
    }
  }
  return report;
}

std::string stability_csv(const StabilityReport& report) {
  std::string out = "level,ac\n";
  for (std::size_t i = 0; i < report.mfw_levels.size(); ++i)
    out += fmt::format("{},{}\n", report.mfw_levels[i], io::format_full(report.ac_by_level[i]));
  return out;
}

std::string stability_ari_csv(const StabilityReport& report) {
  const std::size_t L = report.mfw_levels.size();
  std::vector<std::string> header{"level"};
  for (std::size_t level : report.mfw_levels) header.push_back(std::to_string(level));
  std::string out = io::csv_line(header);
  for (std::size_t i = 0; i < L; ++i) {
    std::vector<std::string> fields{std::to_string(report.mfw_levels[i])};
    for (std::size_t j = 0; j < L; ++j) fields.push_back(io::format_full(report.ari(i, j)));
    out += io::csv_line(fields);
  }
  return out;
}

}  // namespace scriptometer
