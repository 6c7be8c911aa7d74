// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/corpus_files.hpp"
#include "argrec/features/recentness.hpp"
#include "argrec/lm/ngram_model.hpp"
#include "argrec/pipeline/config.hpp"
#include "argrec/typesys/type_index.hpp"

#include <optional>
#include <string>
#include <vector>

namespace argrec::interface {

inline constexpr int kBundleVersion = 1;
inline constexpr std::string_view kCountsFormat = "sorted-text-v1";
inline constexpr int kHeavyOrder = 10;

struct TrainingFile {
  std::string path;
  std::string project;
  std::string hash;
};

struct TrainOptions {
  lm::LmConfig lm;
  bool heavy = false;
  int heavyOrder = kHeavyOrder;
  pipeline::PipelineConfig pipeline;
  bool strict = false;
};

struct Bundle {
  lm::NGramModel model;
  std::optional<lm::NGramModel> heavy;
  features::RecentnessTables tables;
  pipeline::PipelineConfig config;
  std::vector<types::TypeEntry> types; // project types seen in training
  std::vector<TrainingFile> files;
  size_t recentnessSamples = 0;
  std::vector<std::string> warnings;
};

// LM stream of one unit: its sub-tokens, scoped by package.
lm::TokenStream unitStream(const corpus::CompilationUnit &unit);

// Throws Error on an empty corpus and IndexError on duplicate types.
Bundle trainBundle(const corpus::LoadedCorpus &corpus, const TrainOptions &opts = {});

// Layout: manifest.json, vocab.txt, counts/global.txt, counts/pkg-N.txt,
// recentness.json, types.json and, when trained, heavy/global.txt. Output
// is byte-identical for identical input.
void writeBundle(const Bundle &b, const std::string &dir);
Bundle loadBundle(const std::string &dir);

// Bundle types plus bundled stubs plus `units`. A type declared in one of
// the units replaces the bundle entry of the same name.
types::TypeIndex indexWithUnits(const Bundle &b,
                                const std::vector<const corpus::CompilationUnit *> &units,
                                const std::vector<std::string> &projects = {});

} // namespace argrec::interface
