// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

// scriptometer-synth: write a synthetic corpus with planted dialect groups.

#include <iostream>

#include "CLI11.hpp"
#include "scriptometer/synthetic.hpp"

int main(int argc, char** argv) {
  using namespace scriptometer;

  CLI::App app{"Write a synthetic corpus with planted dialect groups"};
  SyntheticCorpusSpec spec;
  std::string out;
  app.add_option("--out", out, "Output directory")->required();
  app.add_option("--witnesses", spec.n_witnesses, "Number of witnesses")->capture_default_str();
  app.add_option("--dialects", spec.n_dialects, "Number of planted groups")->capture_default_str();
  app.add_option("--dialect-forms", spec.dialect_forms, "Forms private to each group")->capture_default_str();
  app.add_option("--shared-forms", spec.shared_forms, "Forms shared by all groups")->capture_default_str();
  app.add_option("--shared-fraction", spec.shared_fraction, "Share of tokens from the shared vocabulary")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--min-tokens", spec.min_tokens, "Smallest witness")->capture_default_str();
  app.add_option("--max-tokens", spec.max_tokens, "Largest witness")->capture_default_str();
  app.add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    SyntheticCorpus corpus = generate_dialect_corpus(spec);
    write_corpus(corpus, out);
    std::cout << "wrote " << corpus.metas.size() << " witnesses to " << out << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
