// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scriptometer/metrics.hpp"

namespace scriptometer {

/// Reference to a dendrogram node: either an input leaf or an earlier merge.
struct NodeRef {
  enum class Kind { leaf, merge };
  Kind kind = Kind::leaf;
  std::size_t index = 0;

  static constexpr NodeRef leaf(std::size_t i) noexcept { return {Kind::leaf, i}; }
  static constexpr NodeRef merge(std::size_t i) noexcept { return {Kind::merge, i}; }
  constexpr bool is_leaf() const noexcept { return kind == Kind::leaf; }

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct Merge {
  NodeRef left;
  NodeRef right;
  double height = 0.0;
  std::size_t size = 0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

/// Full merge history of an agglomerative clustering over n leaves.
class Dendrogram {
 public:
  /// Validates that there are n-1 merges, that every node is used exactly
  /// once as a child, that references only point backwards, that sizes add
  /// up, and that heights are finite. A single leaf with no merges is allowed.
  Dendrogram(std::vector<std::string> leaf_ids, std::vector<Merge> merges);

  std::size_t leaf_count() const noexcept { return leaf_ids_.size(); }
  const std::vector<std::string>& leaf_ids() const noexcept { return leaf_ids_; }
  const std::vector<Merge>& merges() const noexcept { return merges_; }

  double height(NodeRef node) const;
  std::size_t size(NodeRef node) const;

  /// Indices of merges lying strictly below some earlier merge. Empty when
  /// heights are non-decreasing in merge order.
  std::vector<std::size_t> inversions() const;
  bool has_inversions() const { return !inversions().empty(); }

  /// Leaves in left-to-right plotting order (depth-first, left child first).
  std::vector<std::size_t> leaf_order() const;

 private:
  std::vector<std::string> leaf_ids_;
  std::vector<Merge> merges_;
};

struct WardOptions {
  /// Square the dissimilarities before clustering and report the square root
  /// of each merge criterion (the "ward.D2" convention).
  bool square_distances = false;
};

/// Ward agglomeration with the Lance-Williams update applied directly to the
/// supplied dissimilarities. Clusters occupy slots; merging slots i < j keeps
/// the union in slot i. The minimal pair is the first minimum in (i, j)
/// lexicographic order over active slots; values within a relative 1e-13
/// of each other count as tied.
Dendrogram ward_cluster(const DistanceMatrix& d, WardOptions options = {});
/// Same, on a raw row-major n x n matrix. Throws on n < 2, a non-square
/// matrix or non-finite entries.
Dendrogram ward_cluster(std::vector<std::string> ids, std::span<const double> values,
                        WardOptions options = {});

/// Mean over leaves of 1 - (height of the leaf's first merge / final height).
double agglomerative_coefficient(const Dendrogram& dend);

/// Partition of labelled items into clusters 0..k-1.
class ClusterAssignment {
 public:
  /// Throws unless every label is below k and every cluster is nonempty.
  ClusterAssignment(std::vector<std::string> ids, std::vector<std::size_t> labels, std::size_t k);

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<std::size_t>& labels() const noexcept { return labels_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t cluster_size(std::size_t cluster) const;
  std::vector<std::size_t> members(std::size_t cluster) const;

  friend bool operator==(const ClusterAssignment&, const ClusterAssignment&) = default;

 private:
  std::vector<std::string> ids_;
  std::vector<std::size_t> labels_;
  std::size_t k_;
};

/// Undoes the last k-1 merges. Clusters are numbered by the first leaf, in
/// leaf_ids order, that belongs to them.
ClusterAssignment cut_tree(const Dendrogram& dend, std::size_t k);

/// Ultrametric Newick: leaves at height 0, each branch is parent height minus
/// child height. With decimals >= 0 node heights are rounded to that many
/// decimals before differencing, so path lengths stay consistent in the
/// printed text; decimals < 0 prints shortest round-trip values.
/// Throws InversionError when a merge sits below one of its children.
std::string to_newick(const Dendrogram& dend, int decimals = 6);

/// `step,left,right,height,size`; steps are 1-based, a leaf is written as
/// -(leaf index + 1) and an earlier merge as its step number.
std::string merges_csv(const Dendrogram& dend);
/// `id,cluster`
std::string groups_csv(const ClusterAssignment& assign);

}  // namespace scriptometer
