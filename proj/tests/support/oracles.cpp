// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <stdlib.h>

namespace oracle {
namespace {

__extension__ typedef __int128 Wide;

std::int64_t grid_at(const GridMatrix& d, std::size_t i, std::size_t j) { return d.units[i * d.n + j]; }

}  // namespace

std::vector<double> GridMatrix::to_doubles() const {
  std::vector<double> out(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) out[i] = std::ldexp(static_cast<double>(units[i]), -exponent);
  return out;
}

GridMatrix random_unit_matrix(std::size_t n, std::mt19937_64& rng) {
  GridMatrix d{n, 53, std::vector<std::int64_t>(n * n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::int64_t u = 0;
      while (u == 0) u = static_cast<std::int64_t>(rng() >> 11);
      d.units[i * n + j] = d.units[j * n + i] = u;
    }
  return d;
}

GridMatrix random_tied_matrix(std::size_t n, std::int64_t levels, std::mt19937_64& rng) {
  GridMatrix d{n, 0, std::vector<std::int64_t>(n * n, 0)};
  std::uniform_int_distribution<std::int64_t> pick(1, levels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d.units[i * n + j] = d.units[j * n + i] = pick(rng);
  return d;
}

std::vector<scriptometer::Merge> naive_ward(const GridMatrix& d) {
  using scriptometer::Merge;
  using scriptometer::NodeRef;
  const std::size_t n = d.n;
  std::vector<std::vector<std::size_t>> members(n);
  std::vector<bool> active(n, true);
  std::vector<NodeRef> node(n);
  for (std::size_t i = 0; i < n; ++i) {
    members[i] = {i};
    node[i] = NodeRef::leaf(i);
  }
  auto block_sum = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    Wide s = 0;
    for (std::size_t x : a)
      for (std::size_t y : b) s += grid_at(d, x, y);
    return s;
  };

  std::vector<Merge> merges;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    bool found = false;
    Wide best_num = 0, best_den = 1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        const Wide na = static_cast<Wide>(members[i].size());
        const Wide nb = static_cast<Wide>(members[j].size());
        Wide num = 2 * na * nb * block_sum(members[i], members[j]) - nb * nb * block_sum(members[i], members[i]) -
                   na * na * block_sum(members[j], members[j]);
        Wide den = na * nb * (na + nb);
        if (!found || num * best_den < best_num * den) {
          found = true;
          best_num = num;
          best_den = den;
          bi = i;
          bj = j;
        }
      }
    }
    long double h = static_cast<long double>(best_num) / static_cast<long double>(best_den);
    h = std::ldexp(h, -d.exponent);
    std::size_t size = members[bi].size() + members[bj].size();
    merges.push_back({node[bi], node[bj], static_cast<double>(h), size});
    members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
    members[bj].clear();
    active[bj] = false;
    node[bi] = NodeRef::merge(step);
  }
  return merges;
}

long double within_ssq(const std::vector<std::vector<double>>& points, const std::vector<std::size_t>& members) {
  if (members.empty()) return 0;
  std::size_t dims = points[members[0]].size();
  long double total = 0;
  for (std::size_t k = 0; k < dims; ++k) {
    long double mean = 0;
    for (std::size_t m : members) mean += points[m][k];
    mean /= static_cast<long double>(members.size());
    for (std::size_t m : members) {
      long double dev = points[m][k] - mean;
      total += dev * dev;
    }
  }
  return total;
}

std::vector<std::size_t> subtree_leaves(const scriptometer::Dendrogram& dend, scriptometer::NodeRef node) {
  std::vector<std::size_t> out;
  std::vector<scriptometer::NodeRef> stack{node};
  while (!stack.empty()) {
    auto r = stack.back();
    stack.pop_back();
    if (r.is_leaf()) {
      out.push_back(r.index);
    } else {
      stack.push_back(dend.merges()[r.index].left);
      stack.push_back(dend.merges()[r.index].right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class NewickReader {
 public:
  explicit NewickReader(const std::string& text) : s_(text) {}

  NewickTree read() {
    NewickTree tree;
    node(0.0L, tree);
    if (peek() != ';') error("expected ';'");
    ++pos_;
    if (pos_ != s_.size()) error("trailing text");
    return tree;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void error(const std::string& what) const {
    throw std::runtime_error("newick: " + what + " at offset " + std::to_string(pos_));
  }

  long double branch() {
    if (peek() != ':') return 0.0L;
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::string_view("0123456789.eE+-").find(s_[pos_]) != std::string_view::npos) ++pos_;
    if (start == pos_) error("missing branch length");
    return std::stold(s_.substr(start, pos_ - start));
  }

  // Reads one subtree whose parent sits at distance `depth` from the root.
  std::vector<std::string> node(long double depth, NewickTree& tree) {
    std::vector<std::string> leaves;
    if (peek() == '(') {
      ++pos_;
      // Children are read relative to this node, then shifted once the
      // node's own branch length is known.
      NewickTree sub;
      for (;;) {
        std::vector<std::string> child = node(0.0L, sub);
        leaves.insert(leaves.end(), child.begin(), child.end());
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        error("expected ',' or ')'");
      }
      long double len = branch();
      for (auto& [name, dist] : sub.root_distance) tree.root_distance[name] = dist + len + depth;
      tree.clades.insert(tree.clades.end(), sub.clades.begin(), sub.clades.end());
      std::vector<std::string> sorted = leaves;
      std::sort(sorted.begin(), sorted.end());
      tree.clades.push_back(sorted);
    } else {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::string_view("(),:;").find(s_[pos_]) == std::string_view::npos) ++pos_;
      if (start == pos_) error("empty leaf name");
      std::string name = s_.substr(start, pos_ - start);
      long double len = branch();
      if (tree.root_distance.contains(name)) error("duplicate leaf " + name);
      tree.root_distance[name] = depth + len;
      leaves.push_back(name);
    }
    return leaves;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

NewickTree parse_newick(const std::string& text) { return NewickReader(text).read(); }

long double lebart_direct(const std::vector<double>& column, const std::vector<bool>& in_cluster) {
  const std::size_t total = column.size();
  std::size_t nk = 0;
  long double sum = 0, sum_k = 0;
  for (std::size_t i = 0; i < total; ++i) {
    sum += column[i];
    if (in_cluster[i]) {
      sum_k += column[i];
      ++nk;
    }
  }
  const long double mean = sum / total;
  const long double mean_k = sum_k / nk;
  long double ss = 0;
  for (double x : column) ss += (x - mean) * (x - mean);
  const long double var = ss / total;
  const long double N = total, n = nk;
  return (mean_k - mean) / std::sqrt((N - n) / (N - 1) * var / n);
}

long double ari_contingency(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::map<std::pair<std::size_t, std::size_t>, long double> cells;
  std::map<std::size_t, long double> rows, cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cells[{a[i], b[i]}] += 1;
    rows[a[i]] += 1;
    cols[b[i]] += 1;
  }
  auto pairs = [](long double x) { return x * (x - 1) / 2; };
  long double index = 0, sa = 0, sb = 0;
  for (const auto& [key, c] : cells) index += pairs(c);
  for (const auto& [key, c] : rows) sa += pairs(c);
  for (const auto& [key, c] : cols) sb += pairs(c);
  const long double all = pairs(static_cast<long double>(a.size()));
  const long double expected = sa * sb / all;
  const long double maximum = (sa + sb) / 2;
  return (index - expected) / (maximum - expected);
}

StatsRecount recount_stats(const std::vector<std::vector<std::string>>& token_lists) {
  StatsRecount r;
  r.n_witnesses = token_lists.size();
  std::map<std::string, std::uint64_t> freq;
  std::vector<long double> sizes;
  for (const auto& tokens : token_lists) {
    for (const auto& t : tokens) ++freq[t];
    r.total_tokens += tokens.size();
    sizes.push_back(static_cast<long double>(tokens.size()));
  }
  std::vector<long double> counts;
  for (const auto& [form, c] : freq) {
    counts.push_back(static_cast<long double>(c));
    if (c == 1) ++r.n_hapaxes;
  }
  r.n_forms = counts.size();

  auto geo = [](const std::vector<long double>& v) -> long double {
    long double logs = 0;
    for (long double x : v) {
      if (x == 0) return 0;
      logs += std::log(x);
    }
    return std::exp(logs / static_cast<long double>(v.size()));
  };
  auto quantile = [](std::vector<long double> v, long double p) -> long double {
    std::sort(v.begin(), v.end());
    long double h = (static_cast<long double>(v.size()) - 1) * p;
    auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= v.size()) return v.back();
    return v[lo] + (h - static_cast<long double>(lo)) * (v[lo + 1] - v[lo]);
  };

  r.form_geo_mean = geo(counts);
  r.form_median = quantile(counts, 0.5L);
  r.form_q3 = quantile(counts, 0.75L);
  r.witness_geo_mean = geo(sizes);
  r.witness_median = quantile(sizes, 0.5L);
  r.witness_min = static_cast<std::uint64_t>(*std::min_element(sizes.begin(), sizes.end()));
  r.witness_max = static_cast<std::uint64_t>(*std::max_element(sizes.begin(), sizes.end()));
  return r;
}

double rel_diff(long double a, long double b) {
  long double scale = std::max({std::fabs(a), std::fabs(b), static_cast<long double>(1e-300)});
  return static_cast<double>(std::fabs(a - b) / scale);
}

TempDir::TempDir(const std::string& tag) {
  std::string pattern = (std::filesystem::temp_directory_path() / ("scriptometer-" + tag + "-XXXXXX")).string();
  if (mkdtemp(pattern.data()) == nullptr) throw std::runtime_error("mkdtemp failed for " + pattern);
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::map<std::string, std::string> snapshot_dir(const std::filesystem::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out[entry.path().filename().string()] = ss.str();
  }
  return out;
}

}  // namespace oracle
