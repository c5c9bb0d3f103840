// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace scriptometer {
namespace {

std::atomic<std::size_t> g_override{0};
thread_local bool t_in_worker = false;

std::size_t default_threads() noexcept {
  if (std::size_t env = parse_thread_count(std::getenv("SCRIPTOMETER_THREADS")); env > 0)
    return env;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::size_t parse_thread_count(const char* text) noexcept {
  if (text == nullptr || *text == '\0') return 0;
  char* end = nullptr;
  long long v = std::strtoll(text, &end, 10);
  if (end == text || *end != '\0' || v <= 0) return 0;
  return static_cast<std::size_t>(v);
}

std::size_t max_threads() noexcept {
  std::size_t n = g_override.load(std::memory_order_relaxed);
  return n > 0 ? n : default_threads();
}

void set_max_threads(std::size_t n) noexcept { g_override.store(n, std::memory_order_relaxed); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  std::size_t workers = std::min(max_threads(), count);
  // Nested calls from inside a worker run inline.
  if (workers <= 1 || t_in_worker) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t block = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * block;
    std::size_t end = std::min(count, begin + block);
    pool.emplace_back([&, w, begin, end] {
      t_in_worker = true;
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace scriptometer
