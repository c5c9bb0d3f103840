// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

// Cluster characterization by the values-test: how far a cluster's mean
// relative frequency of a form sits from the overall mean, in standard
// errors of a mean drawn without replacement.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scriptometer/hierclust.hpp"
#include "scriptometer/matrix.hpp"

namespace scriptometer {

enum class ProfileMode {
  /// (mean_k - mean) / sqrt(((N - n_k) / (N - 1)) * s^2 / n_k)
  lebart,
  /// (mean_k - mean) / s_k, the within-cluster-sd simplification.
  footnote,
};

std::string_view profile_mode_name(ProfileMode mode) noexcept;
/// Accepts "lebart" and "footnote".
std::optional<ProfileMode> parse_profile_mode(std::string_view name) noexcept;

struct ProfileRow {
  std::string form;
  double v_test = 0.0;
  double mean_in_cat = 0.0;
  double overall_mean = 0.0;
  double sd_in_cat = 0.0;
  double overall_sd = 0.0;
  double p_value = 1.0;
};

struct GroupProfile {
  std::size_t cluster_index = 0;
  std::size_t n_members = 0;
  std::vector<ProfileRow> rows;  // every form, descending v_test, ties by form
};

/// Two-sided standard normal tail probability of |v|.
double two_sided_p(double v) noexcept;

/// Values-test statistic from summary statistics (population sds).
/// Returns 0 when the means are equal. Throws Error(profiles) on a zero
/// denominator with unequal means or invalid sizes.
double lebart_statistic(double mean_in_cat, double overall_mean, double overall_sd, std::size_t n_k,
                        std::size_t n_total);
double footnote_statistic(double mean_in_cat, double overall_mean, double sd_in_cat);

/// Values-test of one form for one cluster. Requires 1 <= n_k < N; in
/// footnote mode also s_k > 0 unless the means coincide.
ProfileRow values_test(const RelFreqMatrix& m, const ClusterAssignment& assign, std::size_t cluster,
                       std::size_t form, ProfileMode mode = ProfileMode::lebart);

GroupProfile group_profile(const RelFreqMatrix& m, const ClusterAssignment& assign, std::size_t cluster,
                           ProfileMode mode = ProfileMode::lebart);

/// Profile of an explicit member list against everyone else in `m`.
GroupProfile member_profile(const RelFreqMatrix& m, const std::vector<std::string>& member_ids,
                            ProfileMode mode = ProfileMode::lebart);

/// The `top` most positive and `top` most negative rows, in profile order,
/// each row at most once.
std::vector<ProfileRow> display_rows(const GroupProfile& profile, std::size_t top);

/// Full-precision export with header
/// form,v_test,mean_in_cat,overall_mean,sd_in_cat,overall_sd,p_value.
std::string profile_csv(const GroupProfile& profile);
/// Table-style export of display_rows(): header
/// form,v.test,mean in cat.,overall mean,sd in cat.,overall sd,p.value with
/// values rounded to 4 decimals (p.value rounded, trailing zeros dropped).
std::string profile_display_csv(const GroupProfile& profile, std::size_t top);

}  // namespace scriptometer
