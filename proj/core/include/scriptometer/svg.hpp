// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "scriptometer/hierclust.hpp"

namespace scriptometer {

struct SvgLayout {
  double leaf_spacing = 22.0;
  double plot_height = 320.0;
  double margin_top = 48.0;
  double margin_left = 64.0;
  double margin_right = 24.0;
  double label_band = 140.0;
  std::string title;
};

/// Rectangular dendrogram as a standalone SVG 1.1 document. Leaves sit on
/// the x axis in leaf_order(), labelled vertically and coloured by cluster;
/// merge heights run up the y axis from 0 at the baseline. Elements carry
/// classes: `leaf` labels, `join` horizontal bars, `stem` vertical links,
/// `axis`/`tick` for the scale and `warning` for the inversion banner.
/// Output depends only on the inputs. Throws Error(cli) when the assignment
/// does not cover the same ids as the dendrogram.
std::string render_svg(const Dendrogram& dend, const ClusterAssignment& assign, const SvgLayout& layout = {});

}  // namespace scriptometer
