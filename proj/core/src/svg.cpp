// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/svg.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include <fmt/format.h>

#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"

namespace scriptometer {
namespace {

constexpr std::array<std::string_view, 10> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
};
constexpr std::string_view kMixed = "#333333";

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) { return io::format_fixed(v, 2); }

}  // namespace

std::string render_svg(const Dendrogram& dend, const ClusterAssignment& assign, const SvgLayout& layout) {
  if (assign.ids() != dend.leaf_ids())
    throw Error(Module::cli, "cluster assignment does not match the dendrogram leaves");

  const std::size_t n = dend.leaf_count();
  const auto& merges = dend.merges();
  double top = 0.0;
  for (const Merge& m : merges) top = std::max(top, m.height);
  if (top <= 0.0) top = 1.0;

  const double width = layout.margin_left + layout.leaf_spacing * static_cast<double>(n) + layout.margin_right;
  const double baseline = layout.margin_top + layout.plot_height;
  const double height = baseline + layout.label_band;
  auto y_of = [&](double h) { return baseline - h / top * layout.plot_height; };

  std::vector<double> leaf_x(n);
  std::vector<std::size_t> order = dend.leaf_order();
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    leaf_x[order[pos]] = layout.margin_left + layout.leaf_spacing * (static_cast<double>(pos) + 0.5);

  // Horizontal position and cluster (n = mixed) of every merge node.
  std::vector<double> merge_x(merges.size());
  std::vector<std::size_t> merge_cluster(merges.size());
  auto x_of = [&](NodeRef r) { return r.is_leaf() ? leaf_x[r.index] : merge_x[r.index]; };
  auto cluster_of = [&](NodeRef r) { return r.is_leaf() ? assign.labels()[r.index] : merge_cluster[r.index]; };
  for (std::size_t m = 0; m < merges.size(); ++m) {
    merge_x[m] = (x_of(merges[m].left) + x_of(merges[m].right)) / 2.0;
    std::size_t a = cluster_of(merges[m].left), b = cluster_of(merges[m].right);
    merge_cluster[m] = a == b ? a : n;
  }
  auto colour = [&](std::size_t cluster) {
    return cluster >= n ? kMixed : kPalette[cluster % kPalette.size()];
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      num(width), num(height));
  if (!layout.title.empty()) out += fmt::format("<title>{}</title>\n", escape(layout.title));
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", num(width), num(height));

  if (auto inv = dend.inversions(); !inv.empty()) {
    out += fmt::format(
        "<text class=\"warning\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
        "fill=\"#b00020\">Warning: {} merge(s) below an earlier merge (inversion); heights are not "
        "monotone</text>\n",
        num(layout.margin_left), num(layout.margin_top / 2.0), inv.size());
  }

  // Height axis with five evenly spaced ticks.
  const double axis_x = layout.margin_left - 12.0;
  out += "<g class=\"axis\" stroke=\"#000000\" stroke-width=\"1\">\n";
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", num(axis_x), num(y_of(top)), num(baseline));
  for (int t = 0; t <= 4; ++t) {
    double h = top * t / 4.0;
    out += fmt::format("<line class=\"tick\" x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\"/>\n", num(axis_x - 4.0),
                       num(axis_x), num(y_of(h)));
  }
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">\n";
  for (int t = 0; t <= 4; ++t) {
    double h = top * t / 4.0;
    out += fmt::format("<text class=\"tick\" x=\"{}\" y=\"{}\">{}</text>\n", num(axis_x - 6.0), num(y_of(h) + 3.0),
                       io::format_trimmed(h, 3));
  }
  out += "</g>\n";

  out += "<g fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t m = 0; m < merges.size(); ++m) {
    const Merge& mg = merges[m];
    double y = y_of(mg.height);
    for (NodeRef child : {mg.left, mg.right}) {
      out += fmt::format("<line class=\"stem\" x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{3}\"/>\n",
                         num(x_of(child)), num(y_of(dend.height(child))), num(y), colour(cluster_of(child)));
    }
    out += fmt::format("<line class=\"join\" x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"{3}\"/>\n",
                       num(x_of(mg.left)), num(x_of(mg.right)), num(y), colour(merge_cluster[m]));
  }
  out += "</g>\n";

  out += "<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">\n";
  for (std::size_t leaf : order) {
    double x = leaf_x[leaf];
    double y = baseline + 8.0;
    out += fmt::format(
        "<text class=\"leaf\" x=\"{0}\" y=\"{1}\" transform=\"rotate(-90 {0} {1})\" dy=\"0.35em\" "
        "fill=\"{2}\">{3}</text>\n",
        num(x), num(y), colour(assign.labels()[leaf]), escape(dend.leaf_ids()[leaf]));
  }
  out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace scriptometer
