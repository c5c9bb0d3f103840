// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace scriptometer::detail {

// Neumaier's variant of Kahan summation; order-dependent, so callers must feed
// terms in a fixed order to stay reproducible.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace scriptometer::detail
