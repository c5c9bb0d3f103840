// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/error.hpp"

namespace scriptometer {

std::string_view module_name(Module m) noexcept {
  switch (m) {
    case Module::corpus_ingest: return "corpus_ingest";
    case Module::matrix: return "matrix";
    case Module::metrics: return "metrics";
    case Module::hierclust: return "hierclust";
    case Module::profiles: return "profiles";
    case Module::stability: return "stability";
    case Module::cli: return "cli";
  }
  return "unknown";
}

Error::Error(Module module, const std::string& message)
    : std::runtime_error(std::string(module_name(module)) + ": " + message),
      module_(module),
      detail_(message) {}

InversionError::InversionError(std::size_t merge_index, const std::string& message)
    : Error(Module::hierclust, message), merge_index_(merge_index) {}

}  // namespace scriptometer
