// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/hierclust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"

namespace scriptometer {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Module::hierclust, message); }

// Node ids flattened to 0..n-1 for leaves and n..2n-2 for merges.
std::size_t flat(NodeRef ref, std::size_t n) { return ref.is_leaf() ? ref.index : n + ref.index; }

}  // namespace

Dendrogram::Dendrogram(std::vector<std::string> leaf_ids, std::vector<Merge> merges)
    : leaf_ids_(std::move(leaf_ids)), merges_(std::move(merges)) {
  std::size_t n = leaf_ids_.size();
  if (n == 0) fail("a dendrogram needs at least one leaf");
  if (merges_.size() != n - 1) fail(fmt::format("{} leaves need {} merges, got {}", n, n - 1, merges_.size()));

  std::vector<bool> used(2 * n - 1, false);
  for (std::size_t m = 0; m < merges_.size(); ++m) {
    const Merge& mg = merges_[m];
    for (NodeRef child : {mg.left, mg.right}) {
      if (child.is_leaf() ? child.index >= n : child.index >= m)
        fail(fmt::format("merge {} references a node that does not exist yet", m));
      std::size_t id = flat(child, n);
      if (used[id]) fail(fmt::format("merge {} reuses a node that was already merged", m));
      used[id] = true;
    }
    if (mg.size != size(mg.left) + size(mg.right))
      fail(fmt::format("merge {} has size {}, children sum to {}", m, mg.size, size(mg.left) + size(mg.right)));
    if (!std::isfinite(mg.height)) fail(fmt::format("merge {} has a non-finite height", m));
  }
}

double Dendrogram::height(NodeRef node) const { return node.is_leaf() ? 0.0 : merges_.at(node.index).height; }

std::size_t Dendrogram::size(NodeRef node) const { return node.is_leaf() ? 1 : merges_.at(node.index).size; }

std::vector<std::size_t> Dendrogram::inversions() const {
  std::vector<std::size_t> out;
  double highest = -std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < merges_.size(); ++m) {
    if (merges_[m].height < highest) out.push_back(m);
    highest = std::max(highest, merges_[m].height);
  }
  return out;
}

std::vector<std::size_t> Dendrogram::leaf_order() const {
  if (merges_.empty()) return {0};
  std::vector<std::size_t> order;
  order.reserve(leaf_count());
  std::vector<NodeRef> stack{NodeRef::merge(merges_.size() - 1)};
  while (!stack.empty()) {
    NodeRef node = stack.back();
    stack.pop_back();
    if (node.is_leaf()) {
      order.push_back(node.index);
    } else {
      stack.push_back(merges_[node.index].right);
      stack.push_back(merges_[node.index].left);
    }
  }
  return order;
}

Dendrogram ward_cluster(const DistanceMatrix& d, WardOptions options) {
  return ward_cluster(d.ids(), d.values(), options);
}

// Values this close in relative terms are one tie; LW updates of equal
// rationals can land a few ulps apart.
constexpr double kTieTolerance = 1e-13;

Dendrogram ward_cluster(std::vector<std::string> ids, std::span<const double> values, WardOptions options) {
  const std::size_t n = ids.size();
  if (n < 2) fail(fmt::format("Ward clustering needs at least 2 items, got {}", n));
  if (values.size() != n * n) fail(fmt::format("dissimilarity matrix has {} cells, expected {}", values.size(), n * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double v = values[i * n + j];
      if (!std::isfinite(v)) fail(fmt::format("non-finite dissimilarity between '{}' and '{}'", ids[i], ids[j]));
      if (v != values[j * n + i]) fail(fmt::format("asymmetric dissimilarity between '{}' and '{}'", ids[i], ids[j]));
    }
  }

  std::vector<double> dist(values.begin(), values.end());
  if (options.square_distances)
    for (double& v : dist) v *= v;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return dist[i * n + j]; };

  std::vector<bool> active(n, true);
  std::vector<std::size_t> count(n, 1);
  std::vector<NodeRef> node(n);
  for (std::size_t i = 0; i < n; ++i) node[i] = NodeRef::leaf(i);

  std::vector<Merge> merges;
  merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = n, bj = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && (bi == n || at(i, j) < best - kTieTolerance * std::fabs(best))) {
          best = at(i, j);
          bi = i;
          bj = j;
        }
      }
    }

    const auto ni = static_cast<double>(count[bi]);
    const auto nj = static_cast<double>(count[bj]);
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      const auto nk = static_cast<double>(count[k]);
      double updated = ((ni + nk) * at(bi, k) + (nj + nk) * at(bj, k) - nk * best) / (ni + nj + nk);
      at(bi, k) = updated;
      at(k, bi) = updated;
    }

    merges.push_back({node[bi], node[bj], best, count[bi] + count[bj]});
    node[bi] = NodeRef::merge(step);
    count[bi] += count[bj];
    active[bj] = false;
  }

  if (options.square_distances)
    for (Merge& m : merges) m.height = std::sqrt(m.height);
  return Dendrogram(std::move(ids), std::move(merges));
}

double agglomerative_coefficient(const Dendrogram& dend) {
  std::size_t n = dend.leaf_count();
  if (n < 2) fail("the agglomerative coefficient needs at least 2 leaves");
  double top = dend.merges().back().height;
  if (top == 0.0) fail("final merge height is 0; the agglomerative coefficient is undefined");

  std::vector<double> first(n, 0.0);
  for (const Merge& m : dend.merges())
    for (NodeRef child : {m.left, m.right})
      if (child.is_leaf()) first[child.index] = m.height;

  double sum = 0.0;
  for (double h : first) sum += 1.0 - h / top;
  return sum / static_cast<double>(n);
}

ClusterAssignment::ClusterAssignment(std::vector<std::string> ids, std::vector<std::size_t> labels, std::size_t k)
    : ids_(std::move(ids)), labels_(std::move(labels)), k_(k) {
  if (ids_.size() != labels_.size()) fail(fmt::format("{} ids but {} labels", ids_.size(), labels_.size()));
  if (k_ == 0) fail("a cluster assignment needs at least one cluster");
  std::vector<std::size_t> sizes(k_, 0);
  for (std::size_t label : labels_) {
    if (label >= k_) fail(fmt::format("cluster label {} out of range for k = {}", label, k_));
    ++sizes[label];
  }
  for (std::size_t c = 0; c < k_; ++c)
    if (sizes[c] == 0) fail(fmt::format("cluster {} is empty", c));
}

std::size_t ClusterAssignment::cluster_size(std::size_t cluster) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), cluster));
}

std::vector<std::size_t> ClusterAssignment::members(std::size_t cluster) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == cluster) out.push_back(i);
  return out;
}

ClusterAssignment cut_tree(const Dendrogram& dend, std::size_t k) {
  std::size_t n = dend.leaf_count();
  if (k < 1 || k > n) fail(fmt::format("cannot cut {} leaves into {} clusters", n, k));

  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 0; m + k < n; ++m) {
    const Merge& mg = dend.merges()[m];
    parent[find(flat(mg.left, n))] = n + m;
    parent[find(flat(mg.right, n))] = n + m;
  }

  std::vector<std::size_t> labels(n);
  std::vector<std::size_t> label_of_root(2 * n - 1, n);
  std::size_t next = 0;
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    std::size_t root = find(leaf);
    if (label_of_root[root] == n) label_of_root[root] = next++;
    labels[leaf] = label_of_root[root];
  }
  return ClusterAssignment(dend.leaf_ids(), std::move(labels), k);
}

std::string to_newick(const Dendrogram& dend, int decimals) {
  std::size_t n = dend.leaf_count();
  if (n < 2) fail("Newick export needs at least 2 leaves");
  for (const std::string& id : dend.leaf_ids())
    if (!is_valid_witness_id(id)) fail(fmt::format("leaf id '{}' cannot be written unquoted in Newick", id));

  for (std::size_t m = 0; m < dend.merges().size(); ++m) {
    const Merge& mg = dend.merges()[m];
    for (NodeRef child : {mg.left, mg.right})
      if (mg.height < dend.height(child))
        throw InversionError(m, fmt::format("merge {} at height {} lies below its child at height {}", m,
                                            mg.height, dend.height(child)));
  }

  double scale = decimals >= 0 ? std::pow(10.0, decimals) : 0.0;
  auto node_height = [&](NodeRef node) {
    double h = dend.height(node);
    return decimals >= 0 ? std::round(h * scale) / scale : h;
  };
  auto length = [&](double v) {
    return decimals >= 0 ? io::format_trimmed(v, decimals) : io::format_shortest(v);
  };

  std::string out;
  // Iterative post-order so deep chains cannot exhaust the stack.
  struct Frame {
    NodeRef node;
    int stage;
  };
  std::vector<Frame> stack{{NodeRef::merge(n - 2), 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.node.is_leaf()) {
      out += dend.leaf_ids()[f.node.index];
      stack.pop_back();
      continue;
    }
    const Merge& mg = dend.merges()[f.node.index];
    double here = node_height(f.node);
    switch (f.stage++) {
      case 0:
        out += '(';
        stack.push_back({mg.left, 0});
        break;
      case 1:
        out += ':' + length(here - node_height(mg.left)) + ',';
        stack.push_back({mg.right, 0});
        break;
      default:
        out += ':' + length(here - node_height(mg.right)) + ')';
        stack.pop_back();
    }
  }
  out += ';';
  return out;
}

std::string merges_csv(const Dendrogram& dend) {
  auto ref = [](NodeRef r) {
    return r.is_leaf() ? "-" + std::to_string(r.index + 1) : std::to_string(r.index + 1);
  };
  std::string out = "step,left,right,height,size\n";
  for (std::size_t m = 0; m < dend.merges().size(); ++m) {
    const Merge& mg = dend.merges()[m];
    out += fmt::format("{},{},{},{},{}\n", m + 1, ref(mg.left), ref(mg.right), io::format_full(mg.height), mg.size);
  }
  return out;
}

std::string groups_csv(const ClusterAssignment& assign) {
  std::string out = "id,cluster\n";
  for (std::size_t i = 0; i < assign.size(); ++i)
    out += io::csv_line({assign.ids()[i], std::to_string(assign.labels()[i])});
  return out;
}

}  // namespace scriptometer
