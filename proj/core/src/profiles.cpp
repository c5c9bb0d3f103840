// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "numeric.hpp"
#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"
#include "scriptometer/parallel.hpp"

namespace scriptometer {
namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(Module::profiles, message); }

struct ColumnStats {
  double mean_in_cat;
  double overall_mean;
  double sd_in_cat;
  double overall_sd;
  bool constant;
};

ColumnStats column_stats(const RelFreqMatrix& m, const std::vector<std::size_t>& members, std::size_t form) {
  const std::size_t n = m.rows();
  bool constant = true;
  detail::CompensatedSum all, cat;
  for (std::size_t r = 0; r < n; ++r) {
    all.add(m.at(r, form));
    constant = constant && m.at(r, form) == m.at(0, form);
  }
  for (std::size_t r : members) cat.add(m.at(r, form));
  if (constant) {
    double v = m.at(0, form);
    return {v, v, 0.0, 0.0, true};
  }

  double mean = all.value() / static_cast<double>(n);
  double mean_k = cat.value() / static_cast<double>(members.size());
  detail::CompensatedSum ss, ss_k;
  for (std::size_t r = 0; r < n; ++r) {
    double d = m.at(r, form) - mean;
    ss.add(d * d);
  }
  for (std::size_t r : members) {
    double d = m.at(r, form) - mean_k;
    ss_k.add(d * d);
  }
  return {mean_k, mean, std::sqrt(ss_k.value() / static_cast<double>(members.size())),
          std::sqrt(ss.value() / static_cast<double>(n)), false};
}

void check_alignment(const RelFreqMatrix& m, const ClusterAssignment& assign) {
  if (assign.ids() != m.witness_ids()) fail("cluster assignment ids do not match the frequency matrix rows");
}

GroupProfile profile_for(const RelFreqMatrix& m, const std::vector<std::size_t>& members, std::size_t cluster,
                         ProfileMode mode) {
  GroupProfile profile;
  profile.cluster_index = cluster;
  profile.n_members = members.size();
  profile.rows.resize(m.cols());
  parallel_for(m.cols(), [&](std::size_t f) {
    ColumnStats s = column_stats(m, members, f);
    ProfileRow& row = profile.rows[f];
    row.form = m.forms()[f];
    row.mean_in_cat = s.mean_in_cat;
    row.overall_mean = s.overall_mean;
    row.sd_in_cat = s.sd_in_cat;
    row.overall_sd = s.overall_sd;
    if (s.constant) {
      row.v_test = 0.0;
    } else if (mode == ProfileMode::lebart) {
      row.v_test = lebart_statistic(s.mean_in_cat, s.overall_mean, s.overall_sd, members.size(), m.rows());
    } else {
      try {
        row.v_test = footnote_statistic(s.mean_in_cat, s.overall_mean, s.sd_in_cat);
      } catch (const Error& e) {
        fail(fmt::format("form '{}', cluster {}: {}", row.form, cluster, e.detail()));
      }
    }
    row.p_value = two_sided_p(row.v_test);
  });
  std::sort(profile.rows.begin(), profile.rows.end(), [](const ProfileRow& a, const ProfileRow& b) {
    if (a.v_test != b.v_test) return a.v_test > b.v_test;
    return a.form < b.form;
  });
  return profile;
}

std::vector<std::size_t> checked_members(const RelFreqMatrix& m, const ClusterAssignment& assign, std::size_t cluster) {
  check_alignment(m, assign);
  if (cluster >= assign.k()) fail(fmt::format("cluster {} out of range for k = {}", cluster, assign.k()));
  std::vector<std::size_t> members = assign.members(cluster);
  if (members.empty()) fail(fmt::format("cluster {} is empty", cluster));
  if (members.size() == m.rows())
    fail(fmt::format("cluster {} contains all {} witnesses (n_k = N); the values-test needs a complement", cluster,
                     m.rows()));
  return members;
}

}  // namespace

std::string_view profile_mode_name(ProfileMode mode) noexcept {
  return mode == ProfileMode::lebart ? "lebart" : "footnote";
}

std::optional<ProfileMode> parse_profile_mode(std::string_view name) noexcept {
  if (name == "lebart") return ProfileMode::lebart;
  if (name == "footnote") return ProfileMode::footnote;
  return std::nullopt;
}

double two_sided_p(double v) noexcept { return std::erfc(std::fabs(v) / std::sqrt(2.0)); }

double lebart_statistic(double mean_in_cat, double overall_mean, double overall_sd, std::size_t n_k,
                        std::size_t n_total) {
  if (n_k == 0 || n_k >= n_total)
    fail(fmt::format("values-test needs 1 <= n_k < N, got n_k = {}, N = {}", n_k, n_total));
  double diff = mean_in_cat - overall_mean;
  if (diff == 0.0) return 0.0;
  auto nk = static_cast<double>(n_k);
  auto n = static_cast<double>(n_total);
  double variance_of_mean = ((n - nk) / (n - 1.0)) * overall_sd * overall_sd / nk;
  if (!(variance_of_mean > 0.0)) fail("values-test undefined: overall standard deviation is 0");
  return diff / std::sqrt(variance_of_mean);
}

double footnote_statistic(double mean_in_cat, double overall_mean, double sd_in_cat) {
  double diff = mean_in_cat - overall_mean;
  if (diff == 0.0) return 0.0;
  if (!(sd_in_cat > 0.0)) fail("footnote values-test undefined: within-cluster standard deviation is 0");
  return diff / sd_in_cat;
}

ProfileRow values_test(const RelFreqMatrix& m, const ClusterAssignment& assign, std::size_t cluster,
                       std::size_t form, ProfileMode mode) {
  if (form >= m.cols()) fail(fmt::format("form index {} out of range ({} forms)", form, m.cols()));
  std::vector<std::size_t> members = checked_members(m, assign, cluster);
  ColumnStats s = column_stats(m, members, form);
  ProfileRow row{m.forms()[form], 0.0, s.mean_in_cat, s.overall_mean, s.sd_in_cat, s.overall_sd, 1.0};
  if (!s.constant) {
    row.v_test = mode == ProfileMode::lebart
                     ? lebart_statistic(s.mean_in_cat, s.overall_mean, s.overall_sd, members.size(), m.rows())
                     : footnote_statistic(s.mean_in_cat, s.overall_mean, s.sd_in_cat);
  }
  row.p_value = two_sided_p(row.v_test);
  return row;
}

GroupProfile group_profile(const RelFreqMatrix& m, const ClusterAssignment& assign, std::size_t cluster,
                           ProfileMode mode) {
  return profile_for(m, checked_members(m, assign, cluster), cluster, mode);
}

GroupProfile member_profile(const RelFreqMatrix& m, const std::vector<std::string>& member_ids, ProfileMode mode) {
  std::set<std::string> wanted(member_ids.begin(), member_ids.end());
  std::vector<std::size_t> members;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (wanted.erase(m.witness_ids()[r]) > 0) members.push_back(r);
  if (!wanted.empty()) fail(fmt::format("unknown member id '{}'", *wanted.begin()));
  if (members.empty()) fail("member list is empty");
  if (members.size() == m.rows()) fail("member list covers every witness; the values-test needs a complement");
  return profile_for(m, members, 0, mode);
}

std::vector<ProfileRow> display_rows(const GroupProfile& profile, std::size_t top) {
  const std::size_t n = profile.rows.size();
  std::vector<ProfileRow> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i < top || i + top >= n) out.push_back(profile.rows[i]);
  return out;
}

std::string profile_csv(const GroupProfile& profile) {
  std::string out = "form,v_test,mean_in_cat,overall_mean,sd_in_cat,overall_sd,p_value\n";
  for (const ProfileRow& r : profile.rows) {
    out += io::csv_line({r.form, io::format_full(r.v_test), io::format_full(r.mean_in_cat),
                         io::format_full(r.overall_mean), io::format_full(r.sd_in_cat), io::format_full(r.overall_sd),
                         io::format_full(r.p_value)});
  }
  return out;
}

std::string profile_display_csv(const GroupProfile& profile, std::size_t top) {
  std::string out = "form,v.test,mean in cat.,overall mean,sd in cat.,overall sd,p.value\n";
  for (const ProfileRow& r : display_rows(profile, top)) {
    out += io::csv_line({r.form, io::format_fixed(r.v_test, 4), io::format_fixed(r.mean_in_cat, 4),
                         io::format_fixed(r.overall_mean, 4), io::format_fixed(r.sd_in_cat, 4),
                         io::format_fixed(r.overall_sd, 4), io::format_trimmed(r.p_value, 4)});
  }
  return out;
}

}  // namespace scriptometer
