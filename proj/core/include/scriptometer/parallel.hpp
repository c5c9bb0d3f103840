// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace scriptometer {

/// Upper bound on worker threads used by the library. Defaults to the value of
/// SCRIPTOMETER_THREADS when set to a positive integer, else the hardware
/// concurrency.
std::size_t max_threads() noexcept;

/// Overrides the thread cap for the whole process. 0 restores the default.
void set_max_threads(std::size_t n) noexcept;

/// Parses a SCRIPTOMETER_THREADS-style value; returns 0 for anything that is
/// not a positive integer.
std::size_t parse_thread_count(const char* text) noexcept;

/// Runs body(i) for every i in [0, count). Work is split into contiguous
/// blocks; each index is visited exactly once, so callers that write only to
/// slot i get results independent of the thread count. The first exception
/// thrown (lowest block) is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace scriptometer
