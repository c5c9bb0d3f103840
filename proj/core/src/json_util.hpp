// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include "scriptometer/matrix.hpp"

namespace scriptometer::detail {

nlohmann::ordered_json to_json(const CorpusStats& stats);

}  // namespace scriptometer::detail
