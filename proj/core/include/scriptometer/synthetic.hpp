// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

// Deterministic synthetic corpora with planted dialect groups, used by the
// bundled mini-corpus, tests and benchmarks.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "scriptometer/corpus.hpp"

namespace scriptometer {

struct SyntheticCorpusSpec {
  std::size_t n_witnesses = 12;
  std::size_t n_dialects = 2;
  /// Forms private to each dialect (its function-word inventory).
  std::size_t dialect_forms = 80;
  /// Forms common to every dialect.
  std::size_t shared_forms = 300;
  /// Probability that a token is drawn from the shared vocabulary.
  double shared_fraction = 0.2;
  std::size_t min_tokens = 800;
  std::size_t max_tokens = 2400;
  std::uint64_t seed = 0x5C819707ULL;
};

struct SyntheticCorpus {
  std::vector<WitnessMeta> metas;
  std::vector<std::string> texts;  // raw running text, mixed case and punctuation
  std::vector<std::size_t> dialect;  // planted group of each witness
};

/// Dialects are assigned round-robin over a seeded shuffle, so every dialect
/// gets floor or ceil of n_witnesses / n_dialects members. Forms are drawn
/// from Zipf-shaped distributions; all forms are lowercase ASCII without j/v,
/// so default normalization maps each text back to the drawn forms.
SyntheticCorpus generate_dialect_corpus(const SyntheticCorpusSpec& spec = {});

/// Writes `<id>.txt` files and `metadata.csv` (place_wit holds the planted
/// dialect name) into `dir`, creating it if needed.
void write_corpus(const SyntheticCorpus& corpus, const std::filesystem::path& dir);

std::string dialect_name(std::size_t dialect);

}  // namespace scriptometer
