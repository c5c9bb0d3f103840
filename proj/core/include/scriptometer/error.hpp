// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scriptometer {

/// Pipeline stage that raised an error. Carried by every Error so the CLI can
/// tell the user which step failed.
enum class Module {
  corpus_ingest,
  matrix,
  metrics,
  hierclust,
  profiles,
  stability,
  cli,
};

std::string_view module_name(Module m) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Module module, const std::string& message);

  Module module() const noexcept { return module_; }
  /// Message without the "<module>: " prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Module module_;
  std::string detail_;
};

/// Raised when a dendrogram merge sits below one of its children, which makes
/// ultrametric branch lengths negative.
class InversionError : public Error {
 public:
  InversionError(std::size_t merge_index, const std::string& message);

  std::size_t merge_index() const noexcept { return merge_index_; }

 private:
  std::size_t merge_index_;
};

}  // namespace scriptometer
